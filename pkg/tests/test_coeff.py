from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satelim import QQ, Coefficient, FieldSpec, field_arith, parse_coefficient
from satelim.coeff import BACKEND, MAX_PRIME
from satelim.errors import FieldArithmeticError, ParseError, UsageError

F7 = FieldSpec.prime(7)
small = st.integers(-10**6, 10**6)
nonzero = small.filter(bool)


def test_backend_name():
    assert BACKEND in ("gmpy2", "python")


def test_rational_arithmetic_exact():
    a = QQ.from_fraction(1, 3)
    b = QQ.from_fraction(1, 6)
    assert QQ.add(a, b) == QQ.from_fraction(1, 2)
    assert QQ.div(a, b) == QQ.from_int(2)
    assert QQ.to_str(QQ.sub(b, a)) == "-1/6"


def test_fp_arithmetic():
    assert F7.add(5, 4) == 2
    assert F7.neg(3) == 4
    assert F7.inv(3) == 5
    assert F7.from_fraction(1, 2) == 4
    assert F7.from_int(-1) == 6


def test_division_by_zero():
    with pytest.raises(FieldArithmeticError):
        QQ.inv(QQ.zero)
    with pytest.raises(FieldArithmeticError):
        F7.div(1, 7 % 7)
    with pytest.raises(FieldArithmeticError):
        F7.from_fraction(1, 14)
    with pytest.raises(FieldArithmeticError):
        QQ.from_fraction(1, 0)


@pytest.mark.parametrize("p", [0 + 1, 4, 15, 32001, MAX_PRIME + 11])
def test_bad_characteristic(p):
    with pytest.raises(UsageError):
        FieldSpec.prime(p)


def test_largest_prime_below_bound_accepted():
    F = FieldSpec.prime(2147483647)
    assert F.mul(F.from_int(-1), F.from_int(-1)) == 1


@given(small, small, nonzero)
def test_rational_field_axioms_against_fraction(a, b, c):
    x, y, z = QQ.from_int(a), QQ.from_fraction(b, c), QQ.from_fraction(c, 7)
    assert Fraction(str(QQ.mul(x, QQ.add(y, z)))) == Fraction(a) * (Fraction(b, c) + Fraction(c, 7))
    assert QQ.mul(y, QQ.inv(y)) == QQ.one if b else True


@given(small, small, small)
def test_fp_matches_integer_arithmetic_mod_p(a, b, c):
    p = 32003
    F = FieldSpec.prime(p)
    x, y, z = F.from_int(a), F.from_int(b), F.from_int(c)
    assert F.mul(F.add(x, y), z) == ((a + b) * c) % p
    if y:
        assert F.mul(F.div(x, y), y) == x


def test_coefficient_wrapper():
    a = Coefficient.of(QQ, Fraction(2, 3))
    b = Coefficient.of(QQ, 1)
    assert str(a + b) == "5/3"
    assert str(a / a) == "1"
    assert str(-a) == "-2/3"
    assert str(a.inverse()) == "3/2"
    with pytest.raises(UsageError):
        a + Coefficient.of(F7, 1)


def test_field_arith():
    a = Coefficient.of(F7, 3)
    b = Coefficient.of(F7, 5)
    assert field_arith(a, b, "mul").value == 1
    assert field_arith(a, b, "div").value == F7.div(3, 5)
    with pytest.raises(UsageError):
        field_arith(a, b, "%")
    with pytest.raises(FieldArithmeticError):
        field_arith(a, Coefficient.of(F7, 0), "div")


def test_field_arith_examples():
    half, third = Coefficient.of(QQ, Fraction(1, 2)), Coefficient.of(QQ, Fraction(1, 3))
    assert str(field_arith(half, third, "add")) == "5/6"
    F5 = FieldSpec.prime(5)
    assert field_arith(Coefficient.of(F5, 3), Coefficient.of(F5, 4), "mul").value == 2
    assert str(parse_coefficient("2/4")) == "1/2"


@pytest.mark.parametrize("text,expected", [("3", "3"), ("-4/6", "-2/3"), ("  7 / 21 ", "1/3"), ("−2", "-2")])
def test_parse_coefficient(text, expected):
    assert str(parse_coefficient(text)) == expected


@pytest.mark.parametrize("text", ["", "1/", "a", "1/0", "1.5", "--1"])
def test_parse_coefficient_rejects(text):
    with pytest.raises((ParseError, FieldArithmeticError)):
        parse_coefficient(text)


def test_parse_coefficient_mod_p():
    assert parse_coefficient("1/2", F7).value == 4
