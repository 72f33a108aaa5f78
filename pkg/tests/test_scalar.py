import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxfold.graph import INF
from coxfold.scalar import (COS_SQUARED, ONE, SQRT2, SQRT3, SQRT5, ZERO, Scalar, UnsupportedLabel,
                            form_value, parse_scalar, sign)
from strategies import scalars, sparse_scalars


def test_form_values():
    assert form_value(2) == ZERO
    assert form_value(3) == -ONE
    assert form_value(4) == -SQRT2
    assert form_value(6) == -SQRT3
    assert form_value(5) == Scalar.of(Fraction(-1, 2)) - SQRT5 / 2
    assert form_value(INF) == Scalar.of(-2)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_form_value_is_minus_two_cos(m):
    assert math.isclose(float(form_value(m)), -2 * math.cos(math.pi / m), abs_tol=1e-12)
    # cos^2 table agrees with the form value
    assert form_value(m) * form_value(m) == 4 * COS_SQUARED[m]


def test_unsupported_label():
    with pytest.raises(UnsupportedLabel):
        form_value(7)


def test_surd_products():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * SQRT3 == Scalar.sqrt(6)
    assert Scalar.sqrt(10) * Scalar.sqrt(15) == 5 * Scalar.sqrt(6)
    assert (1 + SQRT5) * (1 - SQRT5) == -4


def test_sign_close_to_zero():
    # 99/70 is a convergent of sqrt2; the difference is about 7e-5
    assert sign(Scalar.of(Fraction(99, 70)) - SQRT2) == 1
    assert sign(Scalar.of(Fraction(1393, 985)) - SQRT2) == -1
    assert sign(SQRT2 + SQRT3 - Scalar.sqrt(10)) == -1


def test_ordering():
    assert SQRT2 < SQRT3 < 2 < SQRT5
    assert sorted([SQRT5, ONE, -SQRT2]) == [-SQRT2, ONE, SQRT5]


def test_printing_and_parsing():
    x = Scalar.of(Fraction(1, 2)) - 3 * SQRT2 + Scalar.sqrt(30)
    assert parse_scalar(str(x)) == x
    assert parse_scalar("sqrt(2)") == SQRT2
    assert parse_scalar("-1/2 - 1/2√5") == form_value(5)
    with pytest.raises(ValueError):
        parse_scalar("√7")
    with pytest.raises(ValueError):
        parse_scalar("")


@given(scalars, scalars, scalars)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(sparse_scalars, sparse_scalars, sparse_scalars)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(scalars)
def test_additive_inverse_and_parse(a):
    assert a - a == ZERO
    assert parse_scalar(str(a)) == a


@given(sparse_scalars)
def test_division_inverts(a):
    if a:
        assert (a / a) == ONE
        assert (ONE / a) * a == ONE


@given(scalars)
def test_sign_matches_float(a):
    f = float(a)
    if abs(f) > 1e-9:
        assert sign(a) == (1 if f > 0 else -1)
    assert sign(a * a) >= 0
    assert sign(-a) == -sign(a)


@given(scalars, st.integers(-5, 5))
def test_hash_consistent_with_integers(a, k):
    assert hash(Scalar.of(k)) == hash(Scalar.of(k) + ZERO)
    assert (a == a + ZERO) and hash(a) == hash(a + ZERO)
