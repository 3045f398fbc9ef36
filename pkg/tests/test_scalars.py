"""Exact surd scalars and the two-backend comparison rules."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatlink import MixedRadicalError, SqrtExt, exact_sqrt, sqrt_ext
from quatlink.scalars import format_scalar, parse_scalar, scalar_eq


def test_exact_sqrt_perfect_square():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)


def test_exact_sqrt_surd():
    root = exact_sqrt(2)
    assert isinstance(root, SqrtExt)
    assert root * root == 2


def test_exact_sqrt_negative_is_none():
    assert exact_sqrt(-3) is None


def test_radicand_normalized_square_free():
    assert sqrt_ext(0, 1, 12) == sqrt_ext(0, 2, 3)
    assert sqrt_ext(1, 0, 5) == Fraction(1)  # b == 0 collapses to a rational


def test_field_operations():
    a = sqrt_ext(1, 1, 2)  # 1 + sqrt(2)
    b = sqrt_ext(3, -2, 2)  # 3 - 2 sqrt(2)
    assert a + b == sqrt_ext(4, -1, 2)
    assert a * b == sqrt_ext(-1, 1, 2)
    assert (a / b) * b == a
    assert a - a == 0
    assert 1 / a == sqrt_ext(-1, 1, 2)  # (1+sqrt2)^-1 = sqrt2 - 1


def test_mixed_radicals_refuse_to_combine():
    with pytest.raises(MixedRadicalError):
        sqrt_ext(0, 1, 2) + sqrt_ext(0, 1, 3)


def test_ordering_exact():
    r2 = exact_sqrt(2)
    r3 = exact_sqrt(3)
    assert Fraction(1) < r2 < Fraction(3, 2) < r3 < Fraction(7, 4)
    assert -r2 < Fraction(0)
    assert sqrt_ext(1, 1, 2) > sqrt_ext(1, -1, 2)


@given(
    st.fractions(min_value=-5, max_value=5),
    st.fractions(min_value=-5, max_value=5).filter(lambda v: v != 0),
    st.sampled_from([2, 3, 5, 7, 11]),
)
def test_sign_matches_float(a, b, d):
    value = SqrtExt(a, b, d)
    assert (value._sign() > 0) == (float(value) > 0)


def test_comparison_with_float_backend():
    assert scalar_eq(exact_sqrt(2), 2**0.5, 1e-12)
    assert scalar_eq(0.3333333333, Fraction(1, 3), 1e-9)
    assert not scalar_eq(0.334, Fraction(1, 3), 1e-9)


def test_relative_tolerance_for_large_values():
    assert scalar_eq(1.0e12, 1.0e12 + 1.0, 1e-9)
    assert not scalar_eq(1.0, 2.0, 1e-9)


def test_format_and_parse_round_trip():
    values = [
        Fraction(3, 7),
        Fraction(-5),
        sqrt_ext(0, 1, 3),
        sqrt_ext(Fraction(1, 2), Fraction(-3, 4), 5),
        sqrt_ext(-2, 1, 2),
    ]
    for v in values:
        assert parse_scalar(format_scalar(v)) == v


def test_exact_equality_is_exact():
    assert not scalar_eq(Fraction(1, 3), Fraction(333333333, 1000000000))
    assert sqrt_ext(0, 1, 2) != Fraction(1)
