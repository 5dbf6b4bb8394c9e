"""Exact multivariate polynomials over the rationals.

Monomials are dense exponent tuples, one entry per ambient variable.  A
:class:`Polynomial` carries its variable names; index 0 is always the
distinguished generic coordinate ``z0``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...], length == number of ambient variables


def total_degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True if the monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

def _revlex_tail(m: Monomial) -> tuple:
    return tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order, exposed through a sort key (larger key = larger monomial).

    ``kind`` is ``"GLOBAL_DEGREVLEX"``, ``"LOCAL_NEG_DEGREVLEX"`` or
    ``"ELIMINATION"``.  The elimination kind is a block order: the variables
    listed in ``block`` are compared first (by degrevlex among themselves), the
    rest break ties by degrevlex.  It is only used internally for saturation and
    projections.
    """

    kind: str
    block: tuple = ()

    def key(self, m: Monomial):
        if self.kind == "GLOBAL_DEGREVLEX":
            return (sum(m), _revlex_tail(m))
        if self.kind == "LOCAL_NEG_DEGREVLEX":
            return (-sum(m), _revlex_tail(m))
        inner = tuple(m[i] for i in self.block)
        outer = tuple(e for i, e in enumerate(m) if i not in self.block)
        return (sum(inner), _revlex_tail(inner), sum(outer), _revlex_tail(outer))

    @property
    def is_global(self) -> bool:
        return self.kind != "LOCAL_NEG_DEGREVLEX"


GLOBAL_DEGREVLEX = MonomialOrder("GLOBAL_DEGREVLEX")
LOCAL_NEG_DEGREVLEX = MonomialOrder("LOCAL_NEG_DEGREVLEX")


def elimination_order(block: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("ELIMINATION", tuple(sorted(block)))


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError(f"monomial length mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial with :class:`~fractions.Fraction` coefficients.

    Zero coefficients are never stored, so two polynomials over the same
    variables are equal exactly when their term maps are equal.
    """

    __slots__ = ("variables", "terms", "_lead", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.variables = tuple(variables)
        nvars = len(self.variables)
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
            c = Fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}
        self._lead = {}
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._lead = {}
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "Polynomial":
        variables = tuple(variables)
        c = Fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables: Sequence[str], index: int) -> "Polynomial":
        variables = tuple(variables)
        if not 0 <= index < len(variables):
            raise IndexError(f"variable index {index} out of range")
        mono = tuple(1 if i == index else 0 for i in range(len(variables)))
        return cls._raw(variables, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], mono: Monomial, coeff=1) -> "Polynomial":
        return cls(variables, {tuple(mono): coeff})

    # -- basic queries ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def order_at_origin(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin); -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def support_variables(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def leading(self, order: MonomialOrder = GLOBAL_DEGREVLEX):
        """Return ``(monomial, coefficient)`` of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        lt = self._lead.get(order)
        if lt is None:
            m = max(self.terms, key=order.key)
            lt = (m, self.terms[m])
            self._lead[order] = lt
        return lt

    def leading_monomial(self, order: MonomialOrder = GLOBAL_DEGREVLEX) -> Monomial:
        return self.leading(order)[0]

    def sorted_terms(self, order: MonomialOrder = GLOBAL_DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable lists differ: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial._raw(self.variables, {m: c for m, c in terms.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(self.variables, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, coeff) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(
            self.variables,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(self.variables, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- normalisations ---------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        if not self.terms:
            return Fraction(0)
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = math.gcd(num, c.numerator * (den // c.denominator))
        return Fraction(num, den)

    def primitive(self, order: MonomialOrder = GLOBAL_DEGREVLEX) -> "Polynomial":
        """Integral, content-free, positive leading coefficient under ``order``."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading(order)[1] < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self, order: MonomialOrder = GLOBAL_DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading(order)[1])

    # -- calculus / substitution -----------------------------------------
    def derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range for {self.nvars} variables")
        terms = {}
        for m, c in self.terms.items():
            e = m[index]
            if e:
                mm = m[:index] + (e - 1,) + m[index + 1:]
                terms[mm] = c * e
        return Polynomial._raw(self.variables, terms)

    def substitute(self, index: int, q: "Polynomial") -> "Polynomial":
        """Replace variable ``index`` by the polynomial ``q``."""
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range for {self.nvars} variables")
        self._check(q)
        powers = {0: Polynomial.constant(self.variables, 1)}
        result = Polynomial.zero(self.variables)
        for m, c in self.terms.items():
            e = m[index]
            if e not in powers:
                powers[e] = q ** e
            rest = m[:index] + (0,) + m[index + 1:]
            result = result + powers[e].mul_term(rest, c)
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def with_variables(self, variables: Sequence[str], positions: Sequence[int]) -> "Polynomial":
        """Embed into a ring with ``variables``; old variable i goes to ``positions[i]``."""
        n = len(variables)
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for i, e in enumerate(m):
                mm[positions[i]] += e
            terms[tuple(mm)] = c
        return Polynomial._raw(tuple(variables), terms)

    def extend(self, extra: Sequence[str]) -> "Polynomial":
        """Append new variables (exponent 0) at the end."""
        k = len(extra)
        return Polynomial._raw(
            self.variables + tuple(extra),
            {m + (0,) * k: c for m, c in self.terms.items()},
        )

    def drop_trailing(self, k: int) -> "Polynomial":
        """Remove the last ``k`` variables, which must not occur."""
        if any(any(m[-k:]) for m in self.terms) and k:
            raise ValueError("cannot drop variables that occur in the polynomial")
        n = self.nvars - k
        return Polynomial._raw(self.variables[:n], {m[:n]: c for m, c in self.terms.items()})

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, {list(self.variables)!r})"


def arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.variables != b.variables:
        raise ValueError(f"variable lists differ: {a.variables} vs {b.variables}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: Polynomial, index: int) -> Polynomial:
    return p.derivative(index)


def substitute(p: Polynomial, index: int, q: Polynomial) -> Polynomial:
    return p.substitute(index, q)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_mono(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Render ``p`` with terms in descending degrevlex order."""
    if not p.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms(GLOBAL_DEGREVLEX)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_mono(m, p.variables)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class PolynomialParseError(ValueError):
    """Raised for malformed polynomial text.

    ``kind`` is one of ``"syntax"``, ``"unknown_identifier"`` or ``"bad_exponent"``;
    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int, kind: str = "syntax"):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.kind = kind


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            break
        num, ident, op = mt.groups()
        start = mt.start(mt.lastindex) if mt.lastindex else pos
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("id", ident, start))
        elif op is not None:
            if op.isspace():
                pos = mt.end()
                continue
            if op not in "+-*^/()":
                raise PolynomialParseError(f"unexpected character {op!r}", start)
            tokens.append((op, op, start))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)
        self.index = {v: k for k, v in enumerate(self.variables)}

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        # a leading sign is accepted so printed output always re-parses
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                raise PolynomialParseError("exponent must be a positive integer", tok[2], "bad_exponent")
            self.take()
            e = int(tok[1])
            if e < 1:
                raise PolynomialParseError("exponent must be a positive integer", tok[2], "bad_exponent")
            base = base ** e
        return base

    def base(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if int(den[1]) == 0:
                    raise PolynomialParseError("zero denominator", den[2])
                value = Fraction(int(tok[1]), int(den[1]))
            return Polynomial.constant(self.variables, value)
        if tok[0] == "id":
            self.take()
            if tok[1] not in self.index:
                raise PolynomialParseError(f"unknown identifier {tok[1]!r}", tok[2], "unknown_identifier")
            return Polynomial.var(self.variables, self.index[tok[1]])
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise PolynomialParseError(f"unexpected {what}", tok[2])


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ``text`` into an expanded :class:`Polynomial` over ``variables``."""
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable names in {variables}")
    parser = _Parser(text, variables)
    result = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise PolynomialParseError(f"unexpected {tok[1]!r}", tok[2])
    return result
