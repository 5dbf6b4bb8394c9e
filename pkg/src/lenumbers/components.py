"""Splitting a one-dimensional scheme at the origin into rational curve components.

The splitter is factorisation driven: a generator that factors splits the
variety as ``V(I + (g*h)) = V(I + (g)) u V(I + (h))``.  A branch whose basis no
longer factors is certified prime by eliminating variables that occur
linearly, which leaves either a line or an irreducible plane curve.  Anything
else is surfaced as a residual ideal.

Lengths (cycle coefficients) come from intersection numbers with a random
linear form: ``e_i = colength(Q_i + l) / colength(P_i + l)`` where ``Q_i`` is
the input saturated away from the other components.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

import sympy

from .errors import GenericTrialFailed, NotCurveError, SplitIncompleteError
from .ideals import (
    INFINITE,
    IdealBasis,
    buchberger,
    eliminate,
    global_dimension,
    local_colength,
    local_dimension,
    normal_form,
    saturate,
)
from .poly import Polynomial


@dataclass(frozen=True)
class SplitConfig:
    max_factor_degree: int = 6
    trials: int = 4
    seed: int = 0


@dataclass(frozen=True)
class CurveComponent:
    """A reduced irreducible curve germ through the origin.

    ``branches`` is the number of complex analytic branches at the origin when
    it can be certified, otherwise ``None`` (unknown).
    """

    prime: IdealBasis
    length: int
    mult_origin: int
    branches: int | None = None

    @property
    def generators(self) -> tuple:
        return self.prime.generators

    def __str__(self):
        return f"{self.length}*V{self.prime}"


@dataclass(frozen=True)
class CycleDecomposition:
    components: tuple
    ideal: tuple
    discarded: tuple = ()
    residuals: tuple = ()
    seed: int = 0

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)


# ---------------------------------------------------------------------------
# factorisation
# ---------------------------------------------------------------------------

def _to_sympy(p: Polynomial):
    gens = sympy.symbols([f"v{i}" for i in range(p.nvars)])
    data = {m: sympy.Rational(c.numerator, c.denominator) for m, c in p.terms.items()}
    return sympy.Poly.from_dict(data, *gens, domain="QQ")


def _from_sympy(sp, variables: tuple) -> Polynomial:
    return Polynomial(variables, {m: Fraction(int(c.p), int(c.q)) for m, c in sp.as_dict().items()})


def factor(p: Polynomial) -> list:
    """Irreducible factors over Q as ``(primitive factor, exponent)`` pairs."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.is_constant():
        return []
    _, facs = _to_sympy(p).factor_list()
    out = [(_from_sympy(f, p.variables).primitive(), k) for f, k in facs]
    return sorted(out, key=lambda fk: (fk[0].degree(), str(fk[0])))


def univariate_factor(p: Polynomial) -> list:
    """Factor a univariate ``p`` into monic irreducibles over Q.

    ``p`` equals its leading coefficient times the product of ``f**k``.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if len(p.support_variables()) > 1:
        raise ValueError("univariate_factor needs a polynomial in one variable")
    return [(f.monic(), k) for f, k in factor(p)]


# ---------------------------------------------------------------------------
# prime certification by linear elimination
# ---------------------------------------------------------------------------

def _linear_variable(g: Polynomial):
    """A variable occurring in ``g`` only as a bare degree-one term, or None."""
    for k in sorted(g.support_variables()):
        if all(m[k] == 0 or (m[k] == 1 and sum(m) == 1) for m in g.terms):
            return k
    return None


@dataclass
class _Reduction:
    free: tuple              # variables left after elimination
    plane: list              # remaining generators (in the free variables)
    eliminated: list = field(default_factory=list)


def _eliminate_linear(gens: Sequence[Polynomial]) -> _Reduction:
    cur = [g for g in gens if g]
    n = cur[0].nvars if cur else 0
    eliminated = []
    while True:
        found = None
        for g in sorted(cur, key=lambda h: (len(h.terms), h.degree(), str(h))):
            k = _linear_variable(g)
            if k is not None:
                found = (g, k)
                break
        if found is None:
            break
        g, k = found
        mono = tuple(1 if i == k else 0 for i in range(n))
        c = g.terms[mono]
        expr = (g - Polynomial.monomial(g.variables, mono, c)).scale(Fraction(-1) / c)
        eliminated.append((k, expr))
        rest = [h.substitute(k, expr) for h in cur if h is not g]
        rest = [h for h in rest if h]
        cur = list(buchberger(rest).generators) if rest else []
    gone = {k for k, _ in eliminated}
    return _Reduction(tuple(i for i in range(n) if i not in gone), cur, eliminated)


def _certify(basis: IdealBasis, cfg: SplitConfig):
    """Return ("prime", reduction) | ("split", polys) | ("residual", reason)."""
    red = _eliminate_linear(basis.generators)
    if not red.plane:
        if len(red.free) == 1:
            return "prime", red
        return "residual", "more than one free variable after elimination"
    if len(red.plane) == 1 and red.plane[0].is_constant():
        return "residual", "unit ideal after elimination"
    for h in red.plane:
        if h.degree() > cfg.max_factor_degree:
            continue
        facs = factor(h)
        if len(facs) > 1 or facs[0][1] > 1:
            return "split", [q for q, _ in facs]
    if len(red.free) == 2 and len(red.plane) == 1:
        if red.plane[0].degree() > cfg.max_factor_degree:
            return "residual", "plane equation above the factor-search degree bound"
        return "prime", red
    # project to coordinate planes and factor the image curve
    free = red.free
    for i in range(len(free)):
        for j in range(i + 1, len(free)):
            drop = [v for v in free if v not in (free[i], free[j])]
            image = eliminate(red.plane, drop) if drop else list(red.plane)
            if len(image) != 1 or image[0].degree() > cfg.max_factor_degree:
                continue
            facs = factor(image[0])
            if len(facs) > 1 or facs[0][1] > 1:
                return "split", [q for q, _ in facs]
    return "residual", "no factorisation or linear elimination certifies primality"


def _passes_through_origin(basis: IdealBasis) -> bool:
    return all(g.constant_term() == 0 for g in basis.generators)


@dataclass
class _Search:
    cfg: SplitConfig
    primes: list = field(default_factory=list)
    discarded: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    seen: set = field(default_factory=set)


def _explore(gens: list, st: _Search) -> None:
    G = buchberger(gens)
    if G.generators in st.seen:
        return
    st.seen.add(G.generators)
    if G.is_unit():
        return
    gdim = global_dimension(G)
    if not _passes_through_origin(G):
        if gdim:
            st.discarded.append(G)
        return
    ldim = local_dimension(list(G.generators))
    if not ldim:
        if gdim:
            st.discarded.append(G)
        return
    for g in sorted(G.generators, key=lambda h: (h.degree(), len(h.terms), str(h))):
        if g.degree() > st.cfg.max_factor_degree:
            continue
        facs = factor(g)
        if len(facs) > 1 or facs[0][1] > 1:
            for q, _ in facs:
                _explore(list(G.generators) + [q], st)
            return
    verdict, data = _certify(G, st.cfg)
    if verdict == "prime":
        if gdim == 1 and ldim == 1 and G not in st.primes:
            st.primes.append(G)
    elif verdict == "split":
        for q in data:
            _explore(list(G.generators) + [q], st)
    else:
        st.residuals.append(G)


# ---------------------------------------------------------------------------
# intersection numbers with random linear forms
# ---------------------------------------------------------------------------

def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def random_linear_form(variables: tuple, rng: random.Random) -> Polynomial:
    n = len(variables)
    terms = {}
    for i in range(n):
        c = rng.randint(1, 9) * rng.choice((1, -1))
        terms[tuple(1 if j == i else 0 for j in range(n))] = c
    return Polynomial(variables, terms)


def multiplicity_at_origin(C, trials: int = 4, seed: int = 0) -> int:
    """mult_0 of the curve: minimal colength of prime + (generic line), confirmed twice."""
    prime = C.prime if isinstance(C, CurveComponent) else C
    gens = list(prime.generators)
    rng = _rng(seed, f"mult:{prime}")
    values = []
    for _ in range(max(trials, 2)):
        ell = random_linear_form(gens[0].variables, rng)
        values.append(local_colength(gens + [ell]))
    best = min(values)
    if best == INFINITE or values.count(best) < 2:
        raise GenericTrialFailed(f"multiplicity of V{prime} did not stabilise: {values}")
    return int(best)


def _length(I: list, prime: IdealBasis, others: list, cfg: SplitConfig, label: str) -> int:
    seps = []
    for P in others:
        g = next((h for h in P.generators if not normal_form(h, prime).is_zero()), None)
        if g is None:
            raise SplitIncompleteError(f"components V{P} and V{prime} are not separated")
        seps.append(g)
    Q = list(saturate(I, reduce(lambda a, b: a * b, seps)).generators) if seps else I
    rng = _rng(cfg.seed, f"length:{label}")
    found = []
    for _ in range(max(cfg.trials, 2)):
        ell = random_linear_form(prime.variables, rng)
        a = local_colength(Q + [ell])
        b = local_colength(list(prime.generators) + [ell])
        if a == INFINITE or b == INFINITE or b == 0 or a % b:
            continue
        found.append(a // b)
        if len(found) >= 2:
            break
    if len(found) < 2 or found[0] != found[1]:
        raise GenericTrialFailed(f"length of V{prime} not certified: {found}")
    return int(found[0])


# ---------------------------------------------------------------------------
# branch counting over C
# ---------------------------------------------------------------------------

def _plane_branches(h: Polynomial, a: int, b: int):
    degs = {sum(m) for m in h.terms}
    if len(degs) == 1:
        # irreducible over Q, hence squarefree: d distinct lines over C
        return degs.pop()
    if len(h.terms) == 2:
        m1, m2 = list(h.terms)
        pure1 = [i for i, e in enumerate(m1) if e]
        pure2 = [i for i, e in enumerate(m2) if e]
        if len(pure1) == 1 and len(pure2) == 1 and pure1 != pure2:
            return math.gcd(m1[pure1[0]], m2[pure2[0]])
    return None


def geometric_branch_count(C) -> int | None:
    """Number of complex branches at the origin, or ``None`` when not certified."""
    prime = C.prime if isinstance(C, CurveComponent) else C
    red = _eliminate_linear(prime.generators)
    if not red.plane and len(red.free) == 1:
        return 1
    if len(red.free) == 2 and len(red.plane) == 1:
        return _plane_branches(red.plane[0], *red.free)
    return None


# ---------------------------------------------------------------------------
# public entry point
# ---------------------------------------------------------------------------

def split_components(gens: Sequence[Polynomial], config: SplitConfig | None = None) -> CycleDecomposition:
    """Decompose the curve germ V(gens) at the origin into weighted components."""
    cfg = config or SplitConfig()
    gens = [g for g in gens if g]
    if not gens:
        raise NotCurveError("zero ideal is not a curve")
    dim = local_dimension(gens)
    if dim != 1:
        raise NotCurveError(f"local dimension at the origin is {dim}, expected 1")
    st = _Search(cfg)
    _explore(list(gens), st)
    primes = sorted(st.primes, key=lambda P: [str(g) for g in P.generators])
    comps = []
    for i, P in enumerate(primes):
        others = primes[:i] + primes[i + 1:]
        try:
            e = _length(list(gens), P, others, cfg, str(P))
        except GenericTrialFailed:
            if not st.residuals:
                raise
            continue  # residual branches make the length uncertifiable
        mult = multiplicity_at_origin(P, cfg.trials, cfg.seed)
        comps.append(CurveComponent(P, e, mult, geometric_branch_count(P)))
    decomp = CycleDecomposition(tuple(comps), tuple(gens), tuple(st.discarded), tuple(st.residuals), cfg.seed)
    if st.residuals:
        raise SplitIncompleteError(
            "unresolved branches: " + "; ".join(str(R) for R in st.residuals), partial=decomp
        )
    return decomp
