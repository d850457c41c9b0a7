"""Exact rational values and truncated decimal rendering.

Every quantity in this package is a stdlib ``fractions.Fraction``, which
already guarantees the canonical form the rest of the code relies on:
denominator >= 1, gcd(|numerator|, denominator) == 1, zero stored as 0/1,
sign carried on the numerator.  This module adds the strict ``p/q`` text
format used by the CLI and JSON surfaces, a three-way comparison helper,
and exact decimal rendering by integer long division.  No floating point
is used anywhere.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def make_rational(num: int, den: int = 1) -> Fraction:
    """Build the canonical rational num/den; a zero denominator is rejected."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse the strict text form: ``p/q`` with optional leading ``-``, or bare ``p``.

    The denominator, when present, is unsigned.  Anything else (floats,
    whitespace inside the number, signed denominators) is rejected.
    """
    m = _RATIONAL_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``p/q``, or bare ``p`` when the denominator is 1."""
    return str(value)


def compare(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b."""
    return (a > b) - (a < b)


@dataclass(frozen=True)
class DecimalApprox:
    """A decimal expansion truncated toward zero, never rounded to nearest.

    ``fraction_digits`` always holds exactly ``scale`` digits (zero padded on
    the left), so the represented value is
    ``sign * (integer_part + fraction_digits / 10**scale)`` and for any
    positive source value v: value(self) <= v < value(self) + 10**-scale.
    """

    sign: int  # +1 or -1
    integer_part: int
    fraction_digits: str
    scale: int

    def value(self) -> Fraction:
        """The exact rational this truncation represents."""
        return self.sign * (self.integer_part + Fraction(int(self.fraction_digits), 10**self.scale))

    def __str__(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}{self.integer_part}.{self.fraction_digits}"


def to_decimal(value: Fraction, digits: int) -> DecimalApprox:
    """Truncated decimal expansion of ``value`` with exactly ``digits`` fraction digits.

    Computed by exact long division on integers; truncation is toward zero,
    so -1/144 at 5 digits is -0.00694.
    """
    if digits < 1:
        raise ValueError("digit count must be >= 1")
    sign = -1 if value < 0 else 1
    mag = abs(value)
    integer_part, rem = divmod(mag.numerator, mag.denominator)
    frac = rem * 10**digits // mag.denominator
    return DecimalApprox(sign, integer_part, str(frac).zfill(digits), digits)
