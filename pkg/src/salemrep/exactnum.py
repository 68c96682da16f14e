"""Exact rational arithmetic and deterministic decimal rendering.

Everything in this package (digit probabilities, series values, cylinder
endpoints and measures) is carried by arbitrary-precision rationals; floats
never enter the core. ``Rational`` is :class:`fractions.Fraction`, which
already stores values reduced and with a positive denominator, so the only
additions here are the text format used by the CLI and a platform-stable
fixed-point renderer.
"""

import re
from fractions import Fraction

Rational = Fraction

_FRACTION_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def normalize(numerator: int, denominator: int) -> Rational:
    """Reduced fraction numerator/denominator with positive denominator."""
    if denominator == 0:
        raise ValueError("denominator must be nonzero")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Rational:
    """Parse ``a/b`` or a bare integer ``a`` (ASCII, optional leading ``-``)."""
    s = text.strip()
    if not _FRACTION_RE.fullmatch(s):
        raise ValueError(f"not a fraction: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(r: Rational) -> str:
    """Inverse of :func:`parse_rational`: ``a/b``, or ``a`` for integers."""
    return str(r)


def to_decimal(r: Rational, places: int) -> str:
    """Fixed-point decimal string with exactly ``places`` fractional digits.

    The last digit is rounded half to even, so output is identical across
    platforms and usable in golden files.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    units = round(r * 10**places)  # Fraction.__round__ rounds half to even
    digits = str(abs(units)).rjust(places + 1, "0")
    sign = "-" if r < 0 else ""
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
