"""Probability-weighted digit systems over [0, 1].

A probability vector p_0..p_{q-1} turns digit strings into numbers through
the increasing singular distribution function of the digit process (Salem's
construction): the stream i_1 i_2 ... maps to

    beta_{i_1} + sum_{k>=2} beta_{i_k} * prod_{r<k} p_{i_r}

where beta_i = p_0 + ... + p_{i-1}. With the uniform vector this is the
ordinary base-q value. This module evaluates finite and eventually periodic
strings exactly, bounds every extension of a prefix, and inverts the map by
greedy digit extraction with exact cycle detection on the remainders.

The public API speaks :class:`fractions.Fraction`; the inner loops run on
gmpy2 rationals, which behave identically but keep long encodes fast.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Optional

from gmpy2 import mpq, mpz

from .digits import Alphabet, DigitWord, Digits, PeriodicDigits, canonicalize
from .exactnum import Rational, parse_rational

COMPLETE = "complete"
TRUNCATED = "truncated"


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"floats are not exact, got {value!r}")
    return Fraction(value)


def _fraction(value: mpq) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class ProbabilityVector:
    """Digit probabilities p_0..p_{q-1}, each strictly inside (0, 1), exact sum 1."""

    alphabet: Alphabet
    p: tuple

    def __post_init__(self) -> None:
        p = tuple(_exact(v) for v in self.p)
        object.__setattr__(self, "p", p)
        if len(p) != self.alphabet.q:
            raise ValueError(f"expected {self.alphabet.q} probabilities, got {len(p)}")
        for v in p:
            if not 0 < v < 1:
                raise ValueError(f"probability {v} outside (0, 1)")
        total = sum(p)
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @classmethod
    def uniform(cls, q: int) -> "ProbabilityVector":
        """The vector with p_i = 1/q; reduces the system to plain base q."""
        return cls(Alphabet(q), (Fraction(1, q),) * q)

    @cached_property
    def betas(self) -> tuple:
        """Cumulative thresholds beta_0 = 0 < beta_1 < ... < beta_q = 1."""
        out = [Fraction(0)]
        for v in self.p:
            out.append(out[-1] + v)
        return tuple(out)

    # Integer views over the common denominator; the evaluation and
    # encoding loops work on these instead of Fraction objects.
    @cached_property
    def _denom(self) -> mpz:
        return mpz(lcm(*(v.denominator for v in self.p)))

    @cached_property
    def _pnum(self) -> tuple:
        D = self._denom
        return tuple(mpz(v.numerator) * (D // v.denominator) for v in self.p)

    @cached_property
    def _betanum(self) -> tuple:
        out = [mpz(0)]
        for n in self._pnum:
            out.append(out[-1] + n)
        return tuple(out)

    @cached_property
    def _pq(self) -> tuple:
        return tuple(mpq(v.numerator, v.denominator) for v in self.p)

    @cached_property
    def _betaq(self) -> tuple:
        out = [mpq(0)]
        for v in self._pq:
            out.append(out[-1] + v)
        return tuple(out)


def parse_probability_vector(text: str) -> ProbabilityVector:
    """Parse comma-separated fractions, e.g. ``1/2,1/3,1/6``."""
    parts = tuple(parse_rational(tok) for tok in text.split(","))
    if len(parts) < 2:
        raise ValueError(f"need at least two probabilities, got {text!r}")
    return ProbabilityVector(Alphabet(len(parts)), parts)


def beta_vector(P: ProbabilityVector) -> tuple:
    """beta_i = p_0 + ... + p_{i-1} for i = 0..q, as a (q+1)-tuple."""
    return P.betas


@dataclass(frozen=True)
class EncodeResult:
    """Outcome of greedy digit extraction.

    ``complete``: digits is a PeriodicDigits that evaluates back to the input
    exactly. ``truncated``: digits is a DigitWord and remainder the exact
    residual, so input = eval_finite(digits) + weight(digits) * remainder.
    """

    kind: str
    digits: Digits
    remainder: Optional[Rational] = None

    def __post_init__(self) -> None:
        if self.kind not in (COMPLETE, TRUNCATED):
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.kind == TRUNCATED) != (self.remainder is not None):
            raise ValueError("remainder must be present exactly for truncated results")

    @property
    def is_complete(self) -> bool:
        return self.kind == COMPLETE


def _require_same_alphabet(P: ProbabilityVector, d) -> None:
    if d.alphabet != P.alphabet:
        raise ValueError(
            f"alphabet mismatch: digits over base {d.alphabet.q}, system over base {P.alphabet.q}"
        )


def _weight_raw(P: ProbabilityVector, letters: tuple) -> mpq:
    num = mpz(1)
    for d in letters:
        num *= P._pnum[d]
    return mpq(num, P._denom ** len(letters))


def _eval_raw(P: ProbabilityVector, letters: tuple) -> mpq:
    # Horner from the right over the common denominator D: after j letters
    # the partial value is N / D^j, one rational reduction at the very end.
    D = P._denom
    bnum = P._betanum
    pnum = P._pnum
    N = mpz(0)
    Dpow = mpz(1)
    for d in reversed(letters):
        N = bnum[d] * Dpow + pnum[d] * N
        Dpow *= D
    return mpq(N, Dpow)


def weight(P: ProbabilityVector, w: DigitWord) -> Rational:
    """Product of the digit probabilities along w; 1 for the empty word."""
    _require_same_alphabet(P, w)
    return _fraction(_weight_raw(P, w.letters))


def eval_finite(P: ProbabilityVector, w: DigitWord) -> Rational:
    """Value of the word followed by the all-zero tail; 0 for the empty word."""
    _require_same_alphabet(P, w)
    return _fraction(_eval_raw(P, w.letters))


def eval_periodic(P: ProbabilityVector, d: PeriodicDigits) -> Rational:
    """Exact value of an eventually periodic string.

    With a = value(preperiod), w = weight(preperiod), c = value(period) and
    rho = weight(period), the series sums to a + w * c / (1 - rho); rho < 1
    because the period is nonempty.
    """
    _require_same_alphabet(P, d)
    a = _eval_raw(P, d.preperiod)
    w = _weight_raw(P, d.preperiod)
    c = _eval_raw(P, d.period)
    rho = _weight_raw(P, d.period)
    return _fraction(a + w * c / (1 - rho))


def eval_prefix_bounds(P: ProbabilityVector, w: DigitWord) -> tuple:
    """Closed enclosure [lo, hi] for every extension of w; hi - lo = weight(w)."""
    lo = eval_finite(P, w)
    return lo, lo + weight(P, w)


def encode(P: ProbabilityVector, x: Rational, max_digits: int = 4096) -> EncodeResult:
    """Greedy digit extraction of x in the system P.

    Repeatedly picks the digit i with beta_i <= y < beta_{i+1} and rescales
    y <- (y - beta_i) / p_i, recording every remainder; an exact repetition
    closes the cycle and yields a complete, canonical periodic result. Not
    every rational has an eventually periodic expansion under every P, so
    after max_digits digits without a repeat the exact remainder is returned
    alongside the digit word instead.
    """
    x = _exact(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must be in [0, 1], got {x}")
    if max_digits < 1:
        raise ValueError(f"max_digits must be positive, got {max_digits}")
    alphabet = P.alphabet
    if x == 1:
        # the single point where the greedy interval rule does not apply
        return EncodeResult(COMPLETE, PeriodicDigits(alphabet, (), (alphabet.top,)))
    betas = list(P._betaq)
    probs = P._pq
    y = mpq(x.numerator, x.denominator)
    seen = {y: 0}
    digits = []
    for _ in range(max_digits):
        i = bisect_right(betas, y) - 1
        digits.append(i)
        y = (y - betas[i]) / probs[i]
        if y in seen:
            j = seen[y]
            return EncodeResult(
                COMPLETE,
                canonicalize(PeriodicDigits(alphabet, tuple(digits[:j]), tuple(digits[j:]))),
            )
        seen[y] = len(digits)
    return EncodeResult(TRUNCATED, DigitWord(alphabet, tuple(digits)), remainder=_fraction(y))
