from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lenumbers.poly import (
    GLOBAL_DEGREVLEX,
    LOCAL_NEG_DEGREVLEX,
    Polynomial,
    PolynomialParseError,
    arith,
    compare,
    parse_polynomial,
    partial_derivative,
    substitute,
)

from conftest import XYZ, Z3, P, to_sympy

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, variables=("x", "y", "z"), max_terms=5, max_exp=3):
    n = len(variables)
    monos = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), max_size=max_terms))
    terms = {m: draw(coeffs) for m in monos}
    return Polynomial(variables, terms)


def test_parse_flagship_expansion():
    f = P("(z^2 - x^2 - y^2)*(z - x)", XYZ)
    assert len(f.terms) == 6
    assert f == P("z^3 - x*z^2 - x^2*z + x^3 - y^2*z + x*y^2", XYZ)


def test_parse_cancellation_gives_zero():
    p = parse_polynomial("0*x + y - y", ("x", "y"))
    assert p.is_zero() and p.terms == {}


def test_parse_corpus_polynomial():
    f = P("z2^2 - z1^3 - z0*z1^2")
    assert len(f.terms) == 3 and f.degree() == 3


def test_parse_rationals_and_unary_minus():
    p = parse_polynomial("-(1/2)*x^2 + 3/4", ("x",))
    assert p.terms == {(2,): Fraction(-1, 2), (0,): Fraction(3, 4)}


@pytest.mark.parametrize(
    "text,kind",
    [("x +* y", "syntax"), ("x + w", "unknown_identifier"), ("x^0", "bad_exponent"),
     ("x^-1", "bad_exponent"), ("(x + y", "syntax"), ("x^y", "bad_exponent")],
)
def test_parse_errors(text, kind):
    with pytest.raises(PolynomialParseError) as err:
        parse_polynomial(text, ("x", "y"))
    assert err.value.kind == kind
    assert 0 <= err.value.position <= len(text)


def test_print_order_and_roundtrip():
    f = P("(z^2-x^2-y^2)*(z-x)", XYZ)
    assert str(f).startswith("x^3")
    assert parse_polynomial(str(f), XYZ) == f


@given(polys())
@settings(max_examples=150, deadline=None)
def test_roundtrip_random(p):
    assert parse_polynomial(str(p), p.variables) == p


@given(polys(), polys(), polys())
@settings(max_examples=80, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a and a + b == b + a
    assert a - a == Polynomial.zero(XYZ)


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys(), polys(), st.integers(0, 2))
@settings(max_examples=80, deadline=None)
def test_leibniz(a, b, i):
    assert (a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i)


def test_arith_examples():
    x, y = (Polynomial.var(("x", "y"), i) for i in range(2))
    assert arith(x + y, x - y, "mul") == x * x - y * y
    assert arith(x, Polynomial.zero(("x", "y")), "add") == x
    lhs = arith(P("z-x", XYZ), P("z^2-x^2-y^2", XYZ), "mul")
    assert lhs == P("(z^2-x^2-y^2)*(z-x)", XYZ)


def test_arith_variable_mismatch():
    with pytest.raises(ValueError):
        arith(P("x", XYZ), P("z0"), "add")


def test_derivatives(flagship):
    assert partial_derivative(P("z2^2 - z1^3 - z0*z1^2"), 2) == P("2*z2")
    assert flagship.derivative(2) == P("2*z*(z-x) + (z^2-x^2-y^2)", XYZ)
    assert flagship.derivative(2) == P("3*z^2 - 2*x*z - x^2 - y^2", XYZ)
    # product rule by hand
    assert flagship.derivative(0) == P("-2*x*(z-x) - (z^2-x^2-y^2)", XYZ)
    with pytest.raises(IndexError):
        flagship.derivative(3)


def test_compare_examples():
    assert compare((2, 0), (1, 1), GLOBAL_DEGREVLEX) == 1
    assert compare((0, 0), (1, 0), LOCAL_NEG_DEGREVLEX) == 1
    for order in (GLOBAL_DEGREVLEX, LOCAL_NEG_DEGREVLEX):
        assert compare((1, 2), (1, 2), order) == 0
    with pytest.raises(ValueError):
        compare((1,), (1, 0), GLOBAL_DEGREVLEX)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=3, max_size=3))
def test_order_laws(ms):
    a, b, c = ms
    for order in (GLOBAL_DEGREVLEX, LOCAL_NEG_DEGREVLEX):
        assert compare(a, b, order) == -compare(b, a, order)
        if compare(a, b, order) <= 0 and compare(b, c, order) <= 0:
            assert compare(a, c, order) <= 0
    assert compare((0, 0, 0), a, GLOBAL_DEGREVLEX) <= 0
    assert compare((0, 0, 0), a, LOCAL_NEG_DEGREVLEX) >= 0


def test_substitute_examples():
    f = P("z2^2 - z1^3 - z0*z1^2")
    zero = Polynomial.zero(Z3)
    assert substitute(f, 1, zero) == P("z2^2")
    g = P("3*z^2 - 2*x*z - x^2 - y^2", XYZ).substitute(1, Polynomial.zero(XYZ))
    assert g.substitute(0, P("-3*z", XYZ)).is_zero()
    assert f.substitute(0, P("z0")) == f
    with pytest.raises(IndexError):
        f.substitute(5, zero)


def test_primitive_and_monic():
    p = P("(3/2)*z0 + 2*z1")
    assert str(p.primitive()) == "3*z0 + 4*z1"
    assert p.monic().leading()[1] == 1
