from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from qshrb.errors import DivisionByNonUnit, ParseError, ZeroSubstitution
from qshrb.scalar import ONE, ZERO, Scalar, parse_scalar, q, substitute_q

Q = sp.Symbol("q")

terms = st.dictionaries(st.integers(-4, 4), st.fractions(min_value=-9, max_value=9, max_denominator=5), max_size=4)
scalars = terms.map(Scalar.from_terms)


def to_sympy(s: Scalar):
    return sp.expand(sum(sp.Rational(c.numerator, c.denominator) * Q**e for e, c in s.terms().items()))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1", {0: 1}),
        ("-2/3", {0: Fraction(-2, 3)}),
        ("q", {1: 1}),
        ("1-q^2", {0: 1, 2: -1}),
        ("1−q^2", {0: 1, 2: -1}),
        ("q^-1", {-1: 1}),
        ("3*q(1+q)", {1: 3, 2: 3}),
        ("2 q^2 - q^2", {2: 1}),
        ("(q+1)(q-1)", {0: -1, 2: 1}),
        ("0", {}),
    ],
)
def test_parse(text, expected):
    assert parse_scalar(text).terms() == {e: Fraction(c) for e, c in expected.items()}


@pytest.mark.parametrize("bad", ["", "q^", "q^1/2", "(1+q", "1+", "x", "q)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_format():
    s = 1 - q**2
    assert s.to_ascii() == "1-q^2"
    assert s.pretty() == "1−q²"
    assert (2 - q**2).pretty() == "2−q²"
    assert Scalar(Fraction(-1, 2)).to_ascii() == "-1/2"
    assert (q**-1 * 3).to_ascii() == "3*q^-1"
    assert ZERO.to_ascii() == "0"


@given(scalars)
def test_format_round_trip(s):
    assert parse_scalar(s.to_ascii()) == s
    assert parse_scalar(s.pretty()) == s


@given(scalars, scalars, scalars)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(scalars, scalars)
def test_matches_sympy(a, b):
    assert to_sympy(a * b) == sp.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a + b) == sp.expand(to_sympy(a) + to_sympy(b))


@given(scalars, st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda v: v != 0))
def test_substitute_is_a_homomorphism(a, v):
    assert substitute_q(a * a, v) == substitute_q(a, v) ** 2
    assert a.substitute(v) == Fraction(str(to_sympy(a).subs(Q, sp.Rational(v.numerator, v.denominator))))


def test_units_and_division():
    assert (3 * q**2).inverse() == Scalar(Fraction(1, 3)) * q**-2
    assert (q / q) == ONE
    with pytest.raises(DivisionByNonUnit):
        (1 + q).inverse()
    with pytest.raises(ZeroSubstitution):
        substitute_q(q**-1, 0)
    assert substitute_q(1 + q, 0) == 1


def test_immutable_and_hashable():
    s = 1 + q
    with pytest.raises(AttributeError):
        s.x = 1
    assert len({s, parse_scalar("q+1"), Scalar(2)}) == 2
    assert Scalar(Fraction(4, 2)).raw == 2


def test_copy_and_pickle():
    import copy
    import pickle

    s = 1 - q**2
    assert copy.deepcopy({"a": [s]}) == {"a": [s]}
    assert pickle.loads(pickle.dumps(s)) == s
