"""Digit-level operators.

Permutations of the alphabet act letterwise on digit strings and induce a
map on represented numbers; the alternating flip replaces the digit at every
position of one parity by its alphabet complement. Both operations are
involutions (the ternary swap and the flips) or have explicit inverses.
"""

from dataclasses import dataclass
from enum import Enum

from .digits import Alphabet, DigitWord, Digits, PeriodicDigits
from .exactnum import Rational
from .salem import ProbabilityVector, eval_periodic


@dataclass(frozen=True)
class DigitPermutation:
    """Bijection on {0..q-1}; image[d] is the image of digit d."""

    alphabet: Alphabet
    image: tuple

    def __post_init__(self) -> None:
        image = tuple(int(d) for d in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(self.alphabet.q)):
            raise ValueError(f"not a bijection on 0..{self.alphabet.top}: {image}")

    def __call__(self, digit: int) -> int:
        return self.image[digit]

    def inverse(self) -> "DigitPermutation":
        inv = [0] * len(self.image)
        for d, img in enumerate(self.image):
            inv[img] = d
        return DigitPermutation(self.alphabet, tuple(inv))


def identity_permutation(alphabet: Alphabet) -> DigitPermutation:
    return DigitPermutation(alphabet, tuple(range(alphabet.q)))


def theta_standard() -> DigitPermutation:
    """The ternary swap fixing 0 and exchanging 1 with 2."""
    return DigitPermutation(Alphabet(3), (0, 2, 1))


def permute_digits(perm: DigitPermutation, d: Digits) -> Digits:
    """Apply the permutation letterwise; the result is re-normalized."""
    if d.alphabet != perm.alphabet:
        raise ValueError(
            f"alphabet mismatch: digits over base {d.alphabet.q}, permutation over base {perm.alphabet.q}"
        )
    image = perm.image
    if isinstance(d, PeriodicDigits):
        return PeriodicDigits(
            d.alphabet,
            tuple(image[t] for t in d.preperiod),
            tuple(image[t] for t in d.period),
        )
    return DigitWord(d.alphabet, tuple(image[t] for t in d.letters))


def f_map(P: ProbabilityVector, perm: DigitPermutation, x_digits: PeriodicDigits) -> Rational:
    """Value of the permuted representation of x.

    This map acts on representations, not on abstract reals: at a point with
    two representations the twins generally map to different values, so the
    representation is an explicit input. Pass canonical digits for
    real-valued queries.
    """
    return eval_periodic(P, permute_digits(perm, x_digits))


class AlternatingScheme(Enum):
    """Which 1-indexed positions receive the digit flip i -> (q-1) - i."""

    ODD_POSITIONS = "odd"
    EVEN_POSITIONS = "even"


def flip_alternating(scheme: AlternatingScheme, d: Digits) -> Digits:
    """Flip the digit at every position of the selected parity.

    Positions count from 1 at the start of the string. For a periodic string
    an odd-length period is doubled first so the flip pattern repeats cleanly
    along the tail; the result re-normalizes to shortest form. Applying the
    same scheme twice restores the input.
    """
    if isinstance(d, DigitWord):
        return DigitWord(d.alphabet, _flip_section(d.alphabet, d.letters, 1, scheme))
    pre = _flip_section(d.alphabet, d.preperiod, 1, scheme)
    per = d.period if len(d.period) % 2 == 0 else d.period * 2
    per = _flip_section(d.alphabet, per, len(d.preperiod) + 1, scheme)
    return PeriodicDigits(d.alphabet, pre, per)


def _flip_section(alphabet: Alphabet, letters: tuple, first_position: int, scheme: AlternatingScheme) -> tuple:
    top = alphabet.top
    flip_odd = scheme is AlternatingScheme.ODD_POSITIONS
    return tuple(
        top - d if ((first_position + k) % 2 == 1) == flip_odd else d
        for k, d in enumerate(letters)
    )
