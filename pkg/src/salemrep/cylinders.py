"""Cylinder geometry of a digit system.

The set of points whose representation starts with a fixed base word is a
closed interval whose length is the product of the digit probabilities along
the base. Cylinders nest, subdivide exactly into q children laid out left to
right with zero gaps, and map under digit permutations to cylinders of
generally different measure.

The sign-alternating variant of a system is handled through its digit
correspondence (:func:`salemrep.operators.flip_alternating`) together with
:func:`alternating_measure`, which applies the product-measure formula
directly to a base written in the alternating system.
"""

from dataclasses import dataclass
from functools import cached_property

from .digits import DigitWord
from .exactnum import Rational
from .operators import DigitPermutation, permute_digits
from .salem import ProbabilityVector, eval_finite, weight


@dataclass(frozen=True)
class Cylinder:
    """All points whose digit string extends ``base``; a closed interval."""

    system: ProbabilityVector
    base: DigitWord

    def __post_init__(self) -> None:
        if self.base.alphabet != self.system.alphabet:
            raise ValueError(
                f"alphabet mismatch: base over {self.base.alphabet.q} digits, "
                f"system over {self.system.alphabet.q}"
            )

    @cached_property
    def inf(self) -> Rational:
        return eval_finite(self.system, self.base)

    @cached_property
    def measure(self) -> Rational:
        return weight(self.system, self.base)

    @property
    def sup(self) -> Rational:
        return self.inf + self.measure

    @property
    def rank(self) -> int:
        return len(self.base)


def cylinder_of(P: ProbabilityVector, base: DigitWord) -> Cylinder:
    """The cylinder with the given base; the empty base gives [0, 1]."""
    return Cylinder(P, base)


def children(c: Cylinder) -> tuple:
    """The q rank+1 subcylinders in digit order; they tile the parent exactly."""
    return tuple(Cylinder(c.system, c.base.extended(d)) for d in range(c.system.alphabet.q))


def f_image(c: Cylinder, perm: DigitPermutation) -> Cylinder:
    """The cylinder whose base is the letterwise image of the source base.

    Its measure is the probability product over the permuted digits, which in
    general differs from the source measure.
    """
    return Cylinder(c.system, permute_digits(perm, c.base))


def alternating_measure(P: ProbabilityVector, base: DigitWord) -> Rational:
    """Measure of an alternating-system cylinder given its base digits.

    The base is read in the sign-alternating system; its measure is the same
    digit-probability product as in the plain system, applied to the
    alternating base.
    """
    return weight(P, base)
