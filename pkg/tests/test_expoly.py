"""Unit and property tests for exact exponential-polynomial arithmetic."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gamma_remainders.expoly import (ExpPoly, ExpPolyError, ParseError,
                                     parse_expoly, render)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(fracs, min_size=0, max_size=4)
expolys = st.dictionaries(st.integers(min_value=0, max_value=4), polys,
                          max_size=4).map(ExpPoly)


# ---- construction and basic algebra --------------------------------------

def test_zero_and_trim():
    z = ExpPoly()
    assert not z
    assert z == ExpPoly({2: [Fraction(0)], 0: []})
    assert z.limit_at_zero() == 0
    assert ExpPoly({1: [Fraction(3), Fraction(0)]}).terms == {1: (Fraction(3),)}


def test_negative_exp_degree_rejected():
    with pytest.raises(ExpPolyError):
        ExpPoly({-1: [Fraction(1)]})


def test_repr_round_trips():
    f = parse_expoly("(t+2)*E^(4t) - 2*t*(2*t+1)*E^(3t) + t + 2")
    assert parse_expoly(render(f)) == f


@given(expolys, expolys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(expolys, expolys, expolys)
@settings(max_examples=60)
def test_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(expolys, expolys)
@settings(max_examples=60)
def test_product_rule(a, b):
    lhs = (a * b).differentiate()
    rhs = a.differentiate() * b + a * b.differentiate()
    assert lhs == rhs


@given(expolys, st.integers(min_value=0, max_value=12))
@settings(max_examples=40)
def test_taylor_matches_derivative_limits(f, n):
    coeffs = f.taylor_coeffs(n + 1)
    from math import factorial
    assert coeffs[n] == Fraction(f.derivative_limit_at_zero(n), factorial(n))


@given(expolys)
@settings(max_examples=60)
def test_render_parse_round_trip(f):
    assert parse_expoly(render(f)) == f


@given(expolys, st.floats(min_value=-2.0, max_value=2.0,
                          allow_nan=False, allow_infinity=False))
@settings(max_examples=40)
def test_eval_matches_termwise_high_precision(f, t):
    got = f.eval(t)
    with mpmath.workdps(60):
        want = mpmath.mpf(0)
        for k, p in f.terms.items():
            pv = sum((mpmath.mpf(c.numerator) / c.denominator * mpmath.mpf(t) ** j
                      for j, c in enumerate(p)), mpmath.mpf(0))
            want += pv * mpmath.exp(k * mpmath.mpf(t))
        assert abs(got - want) <= 1e-12 * (1 + abs(want))


def test_eval_exact_only_at_zero():
    f = parse_expoly("t*E^(2t) + 3")
    assert f.eval(0, exact=True) == 3
    with pytest.raises(ExpPolyError):
        f.eval(Fraction(1, 2), exact=True)


def test_eval_overflow_guard():
    f = parse_expoly("E^(4t)")
    with pytest.raises(OverflowError):
        f.eval(1e9)


# ---- structure queries ---------------------------------------------------

def test_strip_and_content():
    f = parse_expoly("6*t*E^(3t) + 4*E^(2t)")
    assert f.min_exp_degree() == 2
    g = f.strip_exp(2)
    assert g == parse_expoly("6*t*E^(t) + 4")
    assert f.content() == 2
    with pytest.raises(ExpPolyError):
        f.strip_exp(3)


def test_content_of_fractional_poly():
    f = parse_expoly("1/2*t + 3/4")
    assert f.content() == Fraction(1, 4)
    assert f.scale(Fraction(4)).content() == 1


# ---- parsing -------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("0", ExpPoly()),
    ("t", ExpPoly({0: [Fraction(0), Fraction(1)]})),
    ("2t", ExpPoly({0: [Fraction(0), Fraction(2)]})),
    ("--t", ExpPoly({0: [Fraction(0), Fraction(1)]})),
    ("E^t", ExpPoly({1: [Fraction(1)]})),
    ("e^(3t)", ExpPoly({3: [Fraction(1)]})),
    ("exp(2*t)", ExpPoly({2: [Fraction(1)]})),
    ("exp(0)", ExpPoly({0: [Fraction(1)]})),
    ("(t-1)^2", ExpPoly({0: [Fraction(1), Fraction(-2), Fraction(1)]})),
    ("1/2*(t^2+4t+6)", ExpPoly({0: [Fraction(3), Fraction(2), Fraction(1, 2)]})),
    ("t E^(2t) t", ExpPoly({2: [Fraction(0), Fraction(0), Fraction(1)]})),
])
def test_parse_cases(text, expected):
    assert parse_expoly(text) == expected


@pytest.mark.parametrize("text", [
    "", "t +", "E^(t^2)", "E^(t+1)", "E^(-t)", "E^(t/2)", "t^-1",
    "t^(1/2)", "x + 1", "sin(t)", "1/0", "(t", "t)", "2**t",
])
def test_parse_errors(text):
    with pytest.raises(ParseError) as err:
        parse_expoly(text)
    assert err.value.pos >= 0


def test_parse_error_position_points_at_offender():
    with pytest.raises(ParseError) as err:
        parse_expoly("t + sin(t)")
    assert err.value.pos == 4
