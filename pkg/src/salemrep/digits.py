"""Digit alphabets, finite words, and eventually periodic digit strings.

A :class:`PeriodicDigits` value always stores the shortest preperiod and the
shortest (primitive) period, so structural equality coincides with equality
of the underlying infinite digit streams. On top of that normal form sits a
second, value-level identification: a string ending in the all-(q-1) tail
denotes the same number as a rewritten tail-(0) string. ``twin_of`` performs
the rewrite in both directions and ``canonicalize`` picks the tail-(0)
member, which is the deterministic output form everywhere in this package.

Finite words are deliberately a distinct type: a word is the base of a
cylinder, not a number. Where a word must be read as a number it means the
word followed by the all-zero tail.
"""

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterator, Optional, Union

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Alphabet:
    """Digit alphabet {0, 1, ..., q-1} for a fixed base q >= 2."""

    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"base must be at least 2, got {self.q}")

    @property
    def top(self) -> int:
        """The largest digit, q - 1."""
        return self.q - 1


def _checked_letters(alphabet: Alphabet, letters) -> tuple:
    out = tuple(int(d) for d in letters)
    for d in out:
        if not 0 <= d < alphabet.q:
            raise ValueError(f"digit {d} out of range for base {alphabet.q}")
    return out


@dataclass(frozen=True)
class DigitWord:
    """Finite digit tuple over an alphabet; may be empty."""

    alphabet: Alphabet
    letters: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _checked_letters(self.alphabet, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def extended(self, digit: int) -> "DigitWord":
        """This word with one digit appended."""
        return DigitWord(self.alphabet, self.letters + (digit,))

    def __str__(self) -> str:
        return format_digits(self)


def _primitive(word: tuple) -> tuple:
    """Shortest word whose repetition equals ``word``."""
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


@dataclass(frozen=True)
class PeriodicDigits:
    """Eventually periodic digit stream: a preperiod followed by a repeated period.

    Normalized on construction: the period is reduced to its primitive root
    and any preperiod letter equal to the last period letter is absorbed by
    rotating the period. The normal form is unique, so ``==`` and ``hash``
    agree with stream equality.
    """

    alphabet: Alphabet
    preperiod: tuple
    period: tuple

    def __post_init__(self) -> None:
        pre = list(_checked_letters(self.alphabet, self.preperiod))
        per = _checked_letters(self.alphabet, self.period)
        if not per:
            raise ValueError("period must be nonempty")
        per = _primitive(per)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "preperiod", tuple(pre))
        object.__setattr__(self, "period", per)

    def digit_at(self, k: int) -> int:
        """Digit at 0-based stream position k."""
        if k < len(self.preperiod):
            return self.preperiod[k]
        return self.period[(k - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> DigitWord:
        """The first n stream digits as a finite word."""
        return DigitWord(self.alphabet, tuple(self.digit_at(k) for k in range(n)))

    def __str__(self) -> str:
        return format_digits(self)


Digits = Union[DigitWord, PeriodicDigits]

_PERIODIC_RE = re.compile(r"([^()]*)\(([^()]*)\)")
_NUMBER_RE = re.compile(r"[0-9]+")


def parse_digits(text: str, alphabet: Alphabet) -> Digits:
    """Parse ``prefix`` as a finite word or ``prefix(period)`` as a periodic string.

    For q <= 10 letters are single characters; for larger bases they are
    comma-separated decimal numbers.
    """
    s = text.strip()
    if "(" in s or ")" in s:
        m = _PERIODIC_RE.fullmatch(s)
        if m is None:
            raise ValueError(f"malformed digit string {text!r}, expected 'prefix' or 'prefix(period)'")
        if m.group(2) == "":
            raise ValueError(f"empty period in digit string {text!r}")
        return PeriodicDigits(
            alphabet,
            _parse_section(m.group(1), alphabet, text),
            _parse_section(m.group(2), alphabet, text),
        )
    return DigitWord(alphabet, _parse_section(s, alphabet, text))


def _parse_section(section: str, alphabet: Alphabet, whole: str) -> tuple:
    if alphabet.q <= 10:
        letters = []
        for ch in section:
            if ch < "0" or ch > "9":
                raise ValueError(f"invalid digit character {ch!r} in {whole!r}")
            letters.append(int(ch))
        return tuple(letters)
    if not section:
        return ()
    letters = []
    for tok in section.split(","):
        tok = tok.strip()
        if not _NUMBER_RE.fullmatch(tok):
            raise ValueError(f"invalid digit {tok!r} in {whole!r}")
        letters.append(int(tok))
    return tuple(letters)


def format_digits(d: Digits) -> str:
    """Inverse of :func:`parse_digits` on normalized values."""
    if isinstance(d, PeriodicDigits):
        return f"{_format_section(d.preperiod, d.alphabet)}({_format_section(d.period, d.alphabet)})"
    return _format_section(d.letters, d.alphabet)


def _format_section(letters: tuple, alphabet: Alphabet) -> str:
    sep = "" if alphabet.q <= 10 else ","
    return sep.join(str(d) for d in letters)


def twin_of(d: PeriodicDigits) -> Optional[PeriodicDigits]:
    """The other digit string denoting the same number, if one exists.

    A tail-(0) string ...i(0) with last preperiod digit i >= 1 pairs with
    ...[i-1](q-1), and vice versa. Strings that are not of this shape denote
    numbers with a unique representation, as do 0 and 1 themselves, where the
    rewrite would leave the alphabet; those return None.
    """
    top = d.alphabet.top
    if d.period == (0,):
        if not d.preperiod:
            return None
        # normal form guarantees the preperiod does not end in 0 here
        last = d.preperiod[-1]
        return PeriodicDigits(d.alphabet, d.preperiod[:-1] + (last - 1,), (top,))
    if d.period == (top,):
        if not d.preperiod:
            return None
        last = d.preperiod[-1]
        return PeriodicDigits(d.alphabet, d.preperiod[:-1] + (last + 1,), (0,))
    return None


def canonicalize(d: PeriodicDigits) -> PeriodicDigits:
    """The canonical member of the (at most two-element) equivalence class.

    Prefers the representation whose period is not (q-1); the string for the
    number 1 stays ``(q-1)``. Idempotent.
    """
    if d.period == (d.alphabet.top,) and d.preperiod:
        return twin_of(d)
    return d


def compare_lex(a: PeriodicDigits, b: PeriodicDigits) -> int:
    """Lexicographic comparison of the digit streams after canonicalization.

    Returns LESS (-1), EQUAL (0) or GREATER (1); EQUAL exactly when both
    strings denote the same real number.
    """
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: base {a.alphabet.q} vs base {b.alphabet.q}")
    ca = canonicalize(a)
    cb = canonicalize(b)
    if ca == cb:
        return EQUAL
    # two eventually periodic streams that agree this far agree everywhere
    horizon = max(len(ca.preperiod), len(cb.preperiod)) + lcm(len(ca.period), len(cb.period))
    for k in range(horizon):
        da, db = ca.digit_at(k), cb.digit_at(k)
        if da != db:
            return LESS if da < db else GREATER
    return EQUAL
