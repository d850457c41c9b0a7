import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surds import (
    baudhayana_series,
    compare_methods,
    decimal_oracle_root,
    error_table,
    floor_root,
    pell_form,
)


@pytest.mark.parametrize(
    "radicand, degree, digits, rendered",
    [
        (2, 2, 6, "1.414213"),
        (10, 2, 6, "3.162277"),
        (8, 3, 3, "2.000"),
        (2, 2, 1, "1.4"),
        (3, 2, 8, "1.73205080"),
        (0, 2, 4, "0.0000"),
    ],
)
def test_oracle_examples(radicand, degree, digits, rendered):
    assert str(decimal_oracle_root(radicand, degree, digits)) == rendered


def test_oracle_rejects_zero_digits():
    with pytest.raises(ValueError):
        decimal_oracle_root(2, 2, 0)


@given(st.integers(min_value=0, max_value=10**6), st.sampled_from([2, 3]), st.integers(min_value=1, max_value=30))
def test_oracle_sandwich(radicand, degree, digits):
    dec = decimal_oracle_root(radicand, degree, digits)
    v = dec.integer_part * 10**digits + int(dec.fraction_digits)
    scaled = radicand * 10 ** (degree * digits)
    assert v**degree <= scaled < (v + 1) ** degree


@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=25))
def test_oracle_agrees_with_stdlib_isqrt(radicand, digits):
    dec = decimal_oracle_root(radicand, 2, digits)
    v = dec.integer_part * 10**digits + int(dec.fraction_digits)
    assert v == math.isqrt(radicand * 10 ** (2 * digits))


@given(st.integers(min_value=0, max_value=10**4), st.sampled_from([2, 3]), st.integers(min_value=1, max_value=20))
def test_oracle_monotone_in_digit_count(radicand, degree, digits):
    shorter = decimal_oracle_root(radicand, degree, digits)
    longer = decimal_oracle_root(radicand, degree, digits + 1)
    assert longer.integer_part == shorter.integer_part
    assert longer.fraction_digits[:-1] == shorter.fraction_digits


def test_sqrt2_error_rows_at_seven_digits():
    report = baudhayana_series(2, 2, 3)
    rows = error_table(report, 7)
    assert str(rows[3].abs_error) == "0.0000021"


def test_sqrt2_error_rows_at_ten_digits():
    report = baudhayana_series(2, 2, 3)
    rows = error_table(report, 10)
    assert [row.correct_digits for row in rows] == [0, 0, 2, 5]
    assert rows[3].approximant == Fraction(577, 408)
    assert rows[3].num_bits == 577 .bit_length()
    assert rows[3].den_bits == 408 .bit_length()


def test_error_rows_for_perfect_square():
    rows = error_table(baudhayana_series(9, 2, 3), 5)
    assert len(rows) == 1
    assert str(rows[0].abs_error) == "0.00000"
    assert rows[0].correct_digits == 5


def test_error_rows_bounded_by_scale():
    for radicand in (2, 3, 5, 99):
        for row in error_table(baudhayana_series(radicand, 2, 4), 12):
            assert 0 <= row.correct_digits <= 12
            assert row.abs_error.sign == 1


def test_correct_digits_non_decreasing_for_squares():
    for radicand in range(2, 120):
        if floor_root(radicand, 2).remainder == 0:
            continue
        rows = error_table(baudhayana_series(radicand, 2, 4), 30)
        counts = [row.correct_digits for row in rows[1:]]
        assert counts == sorted(counts)


def test_error_rows_consistent_with_bounds():
    # above-classified approximants exceed the truncated oracle; below ones
    # cannot exceed it by more than one ulp at the oracle scale
    digits = 15
    for radicand in (2, 3, 5, 7, 10, 145):
        report = baudhayana_series(radicand, 2, 4)
        oracle_value = decimal_oracle_root(radicand, 2, digits).value()
        ulp = Fraction(1, 10**digits)
        for rec in report.records:
            if rec.residual < 0:
                assert rec.approximant > oracle_value
            elif rec.residual > 0:
                assert rec.approximant <= oracle_value + ulp


def test_denominator_growth_along_sqrt2_series():
    report = baudhayana_series(2, 2, 4)
    assert [rec.approximant.denominator for rec in report.records] == [1, 3, 12, 408, 470832]
    assert report.records[4].approximant == Fraction(665857, 470832)


def test_compare_methods_first_iteration_splits():
    table = compare_methods(2, 2, 1, 7)
    assert table.series[1].approximant == Fraction(4, 3)
    assert table.pure_newton[1].approximant == Fraction(3, 2)
    assert Fraction(4, 3) ** 2 < 2 < Fraction(3, 2) ** 2


def test_compare_methods_remerge_at_second_iteration():
    table = compare_methods(2, 2, 2, 7)
    assert table.pure_newton[2].approximant == Fraction(17, 12)
    assert table.series[2].approximant == Fraction(17, 12)


def test_compare_methods_share_the_seed():
    table = compare_methods(145, 2, 3, 10)
    assert table.series[0] == table.pure_newton[0]
    assert table.series[1].approximant == Fraction(301, 25)
    assert table.pure_newton[1].approximant == Fraction(289, 24)


def test_compare_methods_perfect_square_degenerates():
    table = compare_methods(9, 2, 3, 5)
    assert len(table.series) == 1
    assert len(table.pure_newton) == 1
    assert table.series[0].approximant == 3


def test_compare_methods_rejects_zero_iterations():
    with pytest.raises(ValueError):
        compare_methods(2, 2, 0, 5)


@pytest.mark.parametrize(
    "x, radicand, expected",
    [
        (Fraction(577, 408), 2, 1),
        (Fraction(17, 12), 2, 1),
        (Fraction(3), 9, 0),
        (Fraction(7, 5), 2, -1),
        (Fraction(665857, 470832), 2, 1),
    ],
)
def test_pell_form(x, radicand, expected):
    assert pell_form(x, radicand) == expected
