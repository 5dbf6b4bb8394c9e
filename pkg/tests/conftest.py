from fractions import Fraction

import sympy
import pytest

from lenumbers.poly import Polynomial, parse_polynomial

XYZ = ("x", "y", "z")
Z3 = ("z0", "z1", "z2")


def P(text, variables=Z3):
    return parse_polynomial(text, variables)


def to_sympy(p: Polynomial):
    syms = sympy.symbols(p.variables)
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.prod([s**e for s, e in zip(syms, m)])
         for m, c in p.terms.items()),
        sympy.Integer(0),
    )


def from_sympy(expr, variables):
    poly = sympy.Poly(expr, *sympy.symbols(variables), domain="QQ")
    terms = {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}
    return Polynomial(tuple(variables), terms)


@pytest.fixture
def flagship():
    return P("(z^2-x^2-y^2)*(z-x)", XYZ)
