"""Convergence analytics against an independent decimal oracle.

The oracle truncates the true root to p decimal digits by taking the integer
floor root of radicand * 10**(d*p) - a pure binary search, deliberately not
a member of the Newton family under study, so the two routes cannot fail the
same way.  Everything downstream (absolute errors, matching-digit counts,
operand bit sizes, method comparisons) stays in exact integer/rational
arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rational import DecimalApprox, to_decimal
from .roots import ApproximationReport, baudhayana_series, floor_root, newton_neglect_step


@dataclass(frozen=True)
class ErrorRow:
    """Per-iteration analytics for one approximant.

    ``abs_error`` is |approximant - oracle| truncated to the oracle's scale
    (so it is exact up to one final-digit ulp); ``correct_digits`` counts
    leading fraction digits agreeing with the oracle, 0 when even the
    integer parts differ.
    """

    index: int
    approximant: Fraction
    abs_error: DecimalApprox
    correct_digits: int
    num_bits: int
    den_bits: int


@dataclass(frozen=True)
class ComparisonTable:
    """Aligned error rows for the series against a plain Newton run from the same seed."""

    radicand: int
    degree: int
    digits: int
    series: list[ErrorRow]
    pure_newton: list[ErrorRow]


def decimal_oracle_root(radicand: int, degree: int = 2, digits: int = 20) -> DecimalApprox:
    """Truncated p-digit decimal of the true d-th root of the radicand.

    Computed as the integer floor root v of radicand * 10**(d*p), which
    satisfies v**d <= radicand * 10**(d*p) < (v+1)**d, then split into
    integer and fraction digits.
    """
    if digits < 1:
        raise ValueError("digit count must be >= 1")
    scaled = radicand * 10 ** (degree * digits)
    v = floor_root(scaled, degree).root
    integer_part, frac = divmod(v, 10**digits)
    return DecimalApprox(1, integer_part, str(frac).zfill(digits), digits)


def _matching_digits(x: Fraction, oracle: DecimalApprox) -> int:
    xd = to_decimal(x, oracle.scale)
    if xd.sign != oracle.sign or xd.integer_part != oracle.integer_part:
        return 0
    count = 0
    for mine, true in zip(xd.fraction_digits, oracle.fraction_digits):
        if mine != true:
            break
        count += 1
    return count


def _error_row(index: int, x: Fraction, oracle: DecimalApprox, oracle_value: Fraction) -> ErrorRow:
    return ErrorRow(
        index=index,
        approximant=x,
        abs_error=to_decimal(abs(x - oracle_value), oracle.scale),
        correct_digits=_matching_digits(x, oracle),
        num_bits=x.numerator.bit_length(),
        den_bits=x.denominator.bit_length(),
    )


def error_table(report: ApproximationReport, digits: int) -> list[ErrorRow]:
    """One ErrorRow per record of the report, measured against the oracle."""
    oracle = decimal_oracle_root(report.problem.radicand, report.problem.degree, digits)
    oracle_value = oracle.value()
    return [_error_row(rec.index, rec.approximant, oracle, oracle_value) for rec in report.records]


def compare_methods(radicand: int, degree: int = 2, iterations: int = 4, digits: int = 12) -> ComparisonTable:
    """Series run versus a plain Newton run seeded at the same floor root.

    The series opens with the first correction r/(2a+1); plain Newton opens
    with r/(d*a^(d-1)) and then both continue with identical neglect steps,
    so the runs differ at iteration 1 (below versus above the root) and
    re-merge in value as the Newton contraction takes over.
    """
    if iterations < 1:
        raise ValueError(f"iteration count must be >= 1, got {iterations}")
    series_report = baudhayana_series(radicand, degree, iterations)
    fr = floor_root(radicand, degree)
    xs = [Fraction(fr.root)]
    if fr.remainder != 0:
        for _ in range(iterations):
            xs.append(newton_neglect_step(xs[-1], radicand, degree))
    oracle = decimal_oracle_root(radicand, degree, digits)
    oracle_value = oracle.value()
    series_rows = [_error_row(rec.index, rec.approximant, oracle, oracle_value) for rec in series_report.records]
    newton_rows = [_error_row(n, x, oracle, oracle_value) for n, x in enumerate(xs)]
    return ComparisonTable(radicand, degree, digits, series_rows, newton_rows)


def pell_form(x: Fraction, radicand: int) -> int:
    """p**2 - radicand * q**2 for x = p/q in lowest terms; +/-1 marks classical convergents."""
    return x.numerator**2 - radicand * x.denominator**2
