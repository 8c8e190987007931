from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_scalars, scalars
from nildecomp.errors import DivisionByZero, ParseError
from nildecomp.scalars import IMAG, ONE, ZERO, Scalar, scalar


def test_exact_fraction_addition():
    assert scalar("1/2") + scalar("1/3") == scalar("5/6")


def test_imaginary_unit_squares_to_minus_one():
    assert IMAG * IMAG == scalar(-1)


def test_inverse_of_one_plus_i():
    z = ONE + IMAG
    inv = z.inverse()
    # independent check: multiplying back must give exactly 1
    assert inv * z == ONE
    assert inv == Scalar(Fraction(1, 2), Fraction(-1, 2))


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        ZERO.inverse()
    with pytest.raises(DivisionByZero):
        ONE / ZERO


@given(scalars, scalars, scalars)
def test_addition_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(scalars, scalars, scalars)
def test_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(nonzero_scalars)
def test_inverse_multiplies_to_one(a):
    assert a * a.inverse() == ONE


@given(scalars)
def test_render_parse_round_trip(a):
    assert Scalar.parse(str(a)) == a


def test_rendering_forms():
    assert str(scalar("3")) == "3"
    assert str(scalar("-1/2")) == "-1/2"
    assert str(Scalar(Fraction(1, 2), Fraction(-1, 2))) == "1/2-1/2*i"
    assert str(Scalar(Fraction(0), Fraction(1))) == "0+1*i"


def test_parse_accepts_bare_imaginary():
    assert Scalar.parse("2/3*i") == Scalar(Fraction(0), Fraction(2, 3))
    assert Scalar.parse("-1*i") == Scalar(Fraction(0), Fraction(-1))


@pytest.mark.parametrize("text", ["", "x", "1+i", "1/0", "2i", "1 + 2", "1+2*j"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        Scalar.parse(text)


def test_coercion():
    assert scalar(2) == Scalar(Fraction(2))
    assert scalar(Fraction(3, 4)) == Scalar(Fraction(3, 4))
    assert 2 * scalar("1/2") == ONE
    with pytest.raises(TypeError):
        scalar(1.5)
