"""Groebner bases, Mora standard bases and the local invariants built on them.

Global computations use degrevlex; everything "at the origin" uses the local
order ``LOCAL_NEG_DEGREVLEX`` and Mora's normal form.  Over the rationals the
colength and local dimension agree with the complex ones (base change is
flat), which is what makes the rational computation sufficient.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import (
    GLOBAL_DEGREVLEX,
    LOCAL_NEG_DEGREVLEX,
    MonomialOrder,
    Polynomial,
    divides,
    elimination_order,
    mono_div,
    mono_lcm,
    mono_mul,
)

INFINITE = math.inf


@dataclass(frozen=True)
class IdealBasis:
    """A generating set tagged with the order it is a (standard) basis for.

    For the local order ``reduced`` means *minimal and monic*: no leading
    monomial divides another and every leading coefficient is 1.  Tail
    reduction is not attempted there, since it would need power series.
    """

    generators: tuple
    order: MonomialOrder = GLOBAL_DEGREVLEX
    reduced: bool = False

    @property
    def variables(self) -> tuple:
        return self.generators[0].variables if self.generators else ()

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_unit(self) -> bool:
        return any(g.is_constant() and g for g in self.generators)

    def contains(self, p: Polynomial) -> bool:
        """Ideal membership (in the localisation for the local order)."""
        return normal_form(p, self).is_zero()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


# ---------------------------------------------------------------------------
# low level reduction on term dicts
# ---------------------------------------------------------------------------

class _Elt:
    __slots__ = ("poly", "lm", "lc", "terms", "ecart")

    def __init__(self, poly: Polynomial, order: MonomialOrder):
        self.poly = poly
        self.lm, self.lc = poly.leading(order)
        self.terms = poly.terms
        self.ecart = poly.degree() - sum(self.lm)


def _sub_multiple(p: dict, f: Fraction, shift, terms: dict) -> None:
    for gm, gc in terms.items():
        mm = tuple(a + b for a, b in zip(gm, shift))
        v = p.get(mm, 0) - f * gc
        if v:
            p[mm] = v
        else:
            p.pop(mm, None)


def _reduce_full(terms: dict, basis: Sequence[_Elt], key) -> dict:
    """Full division remainder for a global order."""
    p = dict(terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g in basis:
            if divides(g.lm, m):
                _sub_multiple(p, c / g.lc, mono_div(m, g.lm), g.terms)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _mora_nf(terms: dict, basis: Sequence[_Elt], order: MonomialOrder) -> dict:
    """Mora's weak normal form with minimal-ecart reducer selection."""
    key = order.key
    h = dict(terms)
    T = list(basis)
    nvars = len(next(iter(terms))) if terms else 0
    while h:
        lm = max(h, key=key)
        best = None
        for g in T:
            if divides(g.lm, lm) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            return h
        h_ecart = max(sum(m) for m in h) - sum(lm)
        if best.ecart > h_ecart:
            T.append(_Elt(Polynomial._raw(("_",) * nvars, dict(h)), order))
        _sub_multiple(h, h[lm] / best.lc, mono_div(lm, best.lm), best.terms)
    return h


def normal_form(p: Polynomial, basis: IdealBasis) -> Polynomial:
    """Remainder of ``p`` modulo ``basis``; zero iff ``p`` is in the ideal."""
    if p.is_zero():
        return p
    elts = [_Elt(g, basis.order) for g in basis.generators if g]
    if basis.order.is_global:
        rem = _reduce_full(p.terms, elts, basis.order.key)
    else:
        rem = _mora_nf(p.terms, elts, basis.order)
    return Polynomial._raw(p.variables, rem)


def _spoly(a: _Elt, b: _Elt) -> dict:
    lcm = mono_lcm(a.lm, b.lm)
    sa, sb = mono_div(lcm, a.lm), mono_div(lcm, b.lm)
    out = {}
    for m, c in a.terms.items():
        out[mono_mul(m, sa)] = c / a.lc
    _sub_multiple(out, Fraction(1) / b.lc, sb, b.terms)
    return out


def _update(G: list, pairs: set, new: _Elt, key) -> None:
    """Gebauer-Moeller pair update; appends ``new`` to ``G``."""
    k = len(G)
    lmf = new.lm
    kept = set()
    for i, j in pairs:
        L = mono_lcm(G[i].lm, G[j].lm)
        if (not divides(lmf, L) or L == mono_lcm(G[i].lm, lmf) or L == mono_lcm(G[j].lm, lmf)):
            kept.add((i, j))
    by_lcm: dict = {}
    for i in range(k):
        by_lcm.setdefault(mono_lcm(G[i].lm, lmf), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=key):
        if all(not divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = by_lcm[L]
        if not any(mono_lcm(G[i].lm, lmf) == mono_mul(G[i].lm, lmf) for i in idx):
            kept.add((min(idx), k))
    pairs.clear()
    pairs.update(kept)
    G.append(new)


def _as_elts(gens: Sequence[Polynomial], order: MonomialOrder) -> tuple[list, set]:
    G: list = []
    pairs: set = set()
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        g = g.primitive(order)
        if g in seen:
            continue
        seen.add(g)
        _update(G, pairs, _Elt(g, order), order.key)
    return G, pairs


def _complete(gens: Sequence[Polynomial], order: MonomialOrder) -> list:
    key = order.key
    G, pairs = _as_elts(gens, order)
    if any(not any(g.lm) for g in G):
        return [g for g in G if not any(g.lm)][:1]
    variables = G[0].poly.variables if G else ()
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(G[ij[0]].lm, G[ij[1]].lm)), ij))
        pairs.remove((i, j))
        s = _spoly(G[i], G[j])
        if order.is_global:
            r = _reduce_full(s, G, key)
        else:
            r = _mora_nf(s, G, order)
        if r:
            h = Polynomial._raw(variables, r).primitive(order)
            e = _Elt(h, order)
            if not any(e.lm):
                return [e]
            _update(G, pairs, e, key)
    return G


def _minimalize(G: list, key) -> list:
    out = []
    for g in sorted(G, key=lambda e: (key(e.lm), len(e.terms))):
        if all(not divides(h.lm, g.lm) for h in out):
            out.append(g)
    return out


def _sort_basis(polys: list, order: MonomialOrder) -> tuple:
    return tuple(sorted(polys, key=lambda p: (order.key(p.leading_monomial(order)), str(p)), reverse=True))


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GLOBAL_DEGREVLEX) -> IdealBasis:
    """Reduced Groebner basis of ``gens`` for a global ``order``."""
    if not order.is_global:
        raise ValueError("buchberger needs a global order; use mora_standard_basis")
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    variables = gens[0].variables
    if any(g.variables != variables for g in gens):
        raise ValueError("generators live in different rings")
    G = _complete(gens, order)
    if not G:
        return IdealBasis((), order, True)
    if any(not any(e.lm) for e in G):
        return IdealBasis((Polynomial.constant(variables, 1),), order, True)
    G = _minimalize(G, order.key)
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        r = _reduce_full(g.terms, others, order.key)
        reduced.append(Polynomial._raw(variables, r).monic(order))
    return IdealBasis(_sort_basis(reduced, order), order, True)


def mora_standard_basis(gens: Sequence[Polynomial]) -> IdealBasis:
    """Minimal monic standard basis of ``gens`` in the localisation at the origin."""
    order = LOCAL_NEG_DEGREVLEX
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    variables = gens[0].variables
    G = _complete(gens, order)
    if not G:
        return IdealBasis((), order, True)
    if any(not any(e.lm) for e in G):
        return IdealBasis((Polynomial.constant(variables, 1),), order, True)
    G = _minimalize(G, order.key)
    return IdealBasis(_sort_basis([g.poly.monic(order) for g in G], order), order, True)


# ---------------------------------------------------------------------------
# monomial ideal combinatorics
# ---------------------------------------------------------------------------

def monomial_dimension(leads: Sequence, nvars: int):
    """Krull dimension of k[x]/(leads); ``None`` if the ideal is the unit ideal."""
    leads = [tuple(m) for m in leads]
    if any(not any(m) for m in leads):
        return None
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    for size in range(nvars, -1, -1):
        for S in itertools.combinations(range(nvars), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0


def staircase_count(leads: Sequence, nvars: int):
    """Number of monomials outside (leads), or ``INFINITE``."""
    leads = [tuple(m) for m in leads]
    if any(not any(m) for m in leads):
        return 0
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in leads if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))

    def count(prefix: tuple, i: int, cands: list) -> int:
        # cands: leads still possibly dividing an extension of prefix
        if i == nvars:
            return 0 if cands else 1
        total = 0
        for e in range(bounds[i]):
            nxt = [m for m in cands if m[i] <= e]
            if any(all(x == 0 for x in m[i + 1:]) for m in nxt):
                break
            total += count(prefix + (e,), i + 1, nxt)
        return total

    return count((), 0, leads)


def _local_leads(gens: Sequence[Polynomial]) -> tuple[list, int]:
    gens = [g for g in gens if g]
    if not gens:
        return [], 0
    sb = mora_standard_basis(gens)
    return sb.leading_monomials(), gens[0].nvars


def local_colength(gens: Sequence[Polynomial], nvars: int | None = None):
    """dim_Q of the local ring at the origin modulo ``gens``; ``INFINITE`` if not finite."""
    nonzero = [g for g in gens if g]
    if not nonzero:
        return INFINITE if (nvars or (gens[0].nvars if gens else 0)) else 1
    leads, n = _local_leads(nonzero)
    return staircase_count(leads, n)


def local_dimension(gens: Sequence[Polynomial], nvars: int | None = None):
    """Krull dimension at the origin of V(gens); ``None`` when the germ is empty."""
    nonzero = [g for g in gens if g]
    if not nonzero:
        return nvars if nvars is not None else (gens[0].nvars if gens else 0)
    leads, n = _local_leads(nonzero)
    return monomial_dimension(leads, n)


def global_dimension(basis: IdealBasis):
    """Affine dimension from a global Groebner basis; ``None`` for the unit ideal."""
    if not basis.generators:
        return None
    return monomial_dimension(basis.leading_monomials(), basis.generators[0].nvars)


# ---------------------------------------------------------------------------
# quotient, saturation, radical membership, elimination
# ---------------------------------------------------------------------------

def _basis_of(I) -> IdealBasis:
    if isinstance(I, IdealBasis):
        if I.order == GLOBAL_DEGREVLEX and I.reduced:
            return I
        return buchberger(I.generators)
    return buchberger(list(I))


def eliminate(gens: Sequence[Polynomial], drop: Sequence[int]) -> list:
    """Generators of (gens) intersected with the ring without the variables ``drop``."""
    drop = tuple(sorted(drop))
    basis = buchberger(gens, elimination_order(drop))
    return [g for g in basis.generators if not any(g.degree_in(i) > 0 for i in drop)]


def _fresh_name(variables: tuple) -> str:
    name = "_t"
    while name in variables:
        name += "_"
    return name


def saturate(I, g: Polynomial) -> IdealBasis:
    """I : g^infinity as a reduced degrevlex basis."""
    if g.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    I = _basis_of(I)
    variables = g.variables
    if g.is_constant():
        return I
    t = _fresh_name(variables)
    n = len(variables)
    ext = [p.extend([t]) for p in I.generators]
    tvar = Polynomial.var(variables + (t,), n)
    ext.append(Polynomial.constant(variables + (t,), 1) - tvar * g.extend([t]))
    kept = eliminate(ext, [n])
    return buchberger([p.drop_trailing(1) for p in kept] or [Polynomial.zero(variables)])


def divide_exact(p: Polynomial, g: Polynomial) -> Polynomial:
    """p / g, which must be exact."""
    order = GLOBAL_DEGREVLEX
    key = order.key
    glm, glc = g.leading(order)
    rest = dict(p.terms)
    quot = {}
    while rest:
        m = max(rest, key=key)
        if not divides(glm, m):
            raise ValueError(f"{g} does not divide {p}")
        q = mono_div(m, glm)
        f = rest[m] / glc
        quot[q] = f
        _sub_multiple(rest, f, q, g.terms)
    return Polynomial._raw(p.variables, quot)


def ideal_quotient(I, g: Polynomial) -> IdealBasis:
    """I : g as a reduced degrevlex basis."""
    if g.is_zero():
        raise ValueError("cannot take the quotient by the zero polynomial")
    I = _basis_of(I)
    if g.is_constant():
        return I
    variables = g.variables
    t = _fresh_name(variables)
    n = len(variables)
    tvar = Polynomial.var(variables + (t,), n)
    one = Polynomial.constant(variables + (t,), 1)
    ext = [tvar * p.extend([t]) for p in I.generators]
    ext.append((one - tvar) * g.extend([t]))
    inter = [p.drop_trailing(1) for p in eliminate(ext, [n])]
    return buchberger([divide_exact(p, g) for p in inter] or [Polynomial.zero(variables)])


def radical_membership(p: Polynomial, I) -> bool:
    """True iff ``p`` vanishes on V(I), via 1 in I + (1 - t*p)."""
    gens = I.generators if isinstance(I, IdealBasis) else list(I)
    if p.is_zero():
        return True
    variables = p.variables
    t = _fresh_name(variables)
    n = len(variables)
    ext = [q.extend([t]) for q in gens]
    tvar = Polynomial.var(variables + (t,), n)
    ext.append(Polynomial.constant(variables + (t,), 1) - tvar * p.extend([t]))
    return buchberger(ext).is_unit()
