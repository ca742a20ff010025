"""Tests for exact arithmetic with p-power roots of unity."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cc_padic.cyclotomic import CyclotomicValue, phi_length
from cc_padic.errors import PrimeMismatchError
from cc_padic.padic import Angle


def root(p: int, numerator: int, exponent: int) -> CyclotomicValue:
    return CyclotomicValue.from_angle(Angle.of(Fraction(numerator, p**exponent), p))


def angles(p: int, max_exponent: int = 3):
    return st.builds(
        lambda m, r: Angle.of(Fraction(r, p**m), p),
        st.integers(min_value=0, max_value=max_exponent),
        st.integers(min_value=0, max_value=p**max_exponent),
    )


def test_phi_length():
    assert phi_length(2, 0) == 1
    assert phi_length(2, 3) == 4
    assert phi_length(3, 2) == 6
    assert phi_length(5, 1) == 4


def test_minus_one_is_rational():
    value = root(2, 1, 1)
    assert value.is_rational()
    assert value == -1
    assert value.rational_value() == -1


def test_trivial_angle_is_one():
    assert CyclotomicValue.from_angle(Angle.zero(3)) == CyclotomicValue.one(3)


@pytest.mark.parametrize("p, m", [(2, 2), (3, 1), (3, 2), (5, 1)])
def test_roots_of_unity_sum_to_zero(p, m):
    # sum over every p^m-th root of unity
    total = sum((root(p, r, m) for r in range(p**m)), CyclotomicValue.zero(p))
    assert total == 0


def test_order_of_a_primitive_root():
    z = root(3, 1, 2)
    power = CyclotomicValue.one(3)
    for n in range(1, 10):
        power = power * z
        assert (power == 1) == (n == 9)


def test_i_plus_minus_i_demotes_to_zero():
    i = root(2, 1, 2)
    assert not i.is_rational()
    assert i + i.conjugate() == 0
    assert i * i == -1


def test_scale_and_str():
    half = CyclotomicValue.rational(Fraction(1, 2), 3)
    assert str(half) == "1/2"
    z = root(3, 1, 1).scale(2)
    assert str(z) == "2*e(1/3)"
    assert z.terms() == [(Angle.of(Fraction(1, 3), 3), Fraction(2))]


def test_not_rational_raises():
    with pytest.raises(ValueError):
        root(5, 1, 1).rational_value()


def test_prime_mismatch():
    with pytest.raises(PrimeMismatchError):
        root(3, 1, 1) + root(5, 1, 1)


def test_immutable():
    with pytest.raises(AttributeError):
        CyclotomicValue.one(2).order = 3


@given(st.data())
def test_characters_multiply_like_angles(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    a = data.draw(angles(p))
    b = data.draw(angles(p))
    lhs = CyclotomicValue.from_angle(a) * CyclotomicValue.from_angle(b)
    assert lhs == CyclotomicValue.from_angle(a + b)


@given(st.data())
def test_conjugate_is_inverse_on_roots(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    a = data.draw(angles(p))
    z = CyclotomicValue.from_angle(a)
    assert z * z.conjugate() == 1
    assert z.conjugate() == CyclotomicValue.from_angle(-a)


@given(st.data())
def test_promote_keeps_the_value(data):
    p = data.draw(st.sampled_from([2, 3]))
    a = data.draw(angles(p, 2))
    z = CyclotomicValue.from_angle(a)
    promoted = CyclotomicValue(p, 3, z.promote(3))
    assert promoted == z
