"""Polar curve, Le cycle and Le numbers of a polynomial with a curve of critical points.

Coordinates are the polynomial's variables with index 0 as the distinguished
coordinate ``z0``.  The scheme V(df/dz1, ..., df/dzn) is split into components;
those on which df/dz0 vanishes lie in the critical locus and form the Le
cycle, the rest form the relative polar curve.  Then

    lambda0 = (polar curve . V(df/dz0))_0
    lambda1 = (Le cycle . V(z0))_0 = sum_C (C . V(z0))_0 * mu_C

where the Le-cycle coefficient of a component C is its Milnor number mu_C.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .components import CurveComponent, CycleDecomposition, SplitConfig, split_components
from .errors import ImproperIntersection, JacobianError, LeError
from .ideals import INFINITE, local_colength, local_dimension, radical_membership
from .poly import Polynomial


@dataclass(frozen=True)
class GenericityReport:
    slice_isolated: bool
    transversal_ok: tuple
    jacobian_dim_ok: bool

    @property
    def valid(self) -> bool:
        return self.slice_isolated and self.jacobian_dim_ok and all(self.transversal_ok)


@dataclass(frozen=True)
class LeAnalysis:
    """Everything computed for one polynomial.

    ``lambda1`` and ``m`` are ``None`` when a genericity hypothesis fails and
    the corresponding intersection number is not defined; ``r`` is a closed
    interval ``(lo, hi)`` for the number of complex branches of the critical
    locus at the origin.
    """

    f: Polynomial
    gamma1: tuple
    lambda1_cycle: tuple
    lambda0: int | None
    lambda1: int | None
    m: int | None
    r: tuple | None
    n_ambient: int
    genericity: GenericityReport
    polar_intersections: tuple = ()
    le_intersections: tuple = ()
    mult_f: int = 0
    decomposition: CycleDecomposition | None = None
    notes: tuple = field(default=())

    @property
    def valid(self) -> bool:
        return self.genericity.valid and self.lambda1 is not None and self.lambda0 is not None

    @property
    def status(self) -> str:
        return "VALID" if self.valid else "INVALID"

    @property
    def mu(self) -> list:
        return [c.length for c in self.lambda1_cycle]

    def lambda1_from_components(self):
        """lambda1 recomputed from the per-component pairs ((C.V(z0))_0, mu_C)."""
        if any(x is None for x in self.le_intersections):
            return None
        return sum(i * c.length for i, c in zip(self.le_intersections, self.lambda1_cycle))

    def trace_bound_holds(self):
        """m - 1 <= lambda0, the consequence of the monodromy trace formula."""
        if self.m is None or self.lambda0 is None:
            return None
        return self.m - 1 <= self.lambda0


def jacobian_scheme(f: Polynomial):
    """Return ``(partial, full)``: derivatives in z1..zn and in z0..zn.

    Raises :class:`JacobianError` with code ``SMOOTH`` when the origin is not
    a critical point and ``DIM_NOT_ONE`` when the critical locus at the
    origin is not a curve.
    """
    if f.nvars < 2:
        raise ValueError("need at least two variables")
    if f.is_constant():
        raise ValueError("f must be non-constant")
    full = [f.derivative(i) for i in range(f.nvars)]
    partial = full[1:]
    sigma_dim = local_dimension(full, f.nvars)
    if sigma_dim is None:
        raise JacobianError("origin is not a critical point", code="SMOOTH", stage="jacobian")
    if sigma_dim != 1:
        raise JacobianError(
            f"critical locus has dimension {sigma_dim} at the origin", code="DIM_NOT_ONE", stage="jacobian"
        )
    return partial, full


def split_polar_le(decomp, dfdz0: Polynomial):
    """Separate components into (polar curve, Le cycle) by whether df/dz0 vanishes."""
    gamma, lam = [], []
    for comp in decomp:
        (lam if radical_membership(dfdz0, comp.prime) else gamma).append(comp)
    return tuple(gamma), tuple(lam)


def lambda0(gamma1, dfdz0: Polynomial):
    """Return ``(lambda0, per-component intersection numbers with V(df/dz0))``."""
    per = []
    for comp in gamma1:
        k = local_colength(list(comp.generators) + [dfdz0])
        if k == INFINITE:
            raise ImproperIntersection(f"V(df/dz0) meets V{comp.prime} improperly", stage="lambda0")
        per.append(int(k))
    return sum(e * c.length for e, c in zip(per, gamma1)), tuple(per)


def lambda1(lambda1_cycle):
    """Return ``(lambda1, [((C.V(z0))_0, mu_C), ...])``."""
    pairs = []
    for comp in lambda1_cycle:
        z0 = Polynomial.var(comp.prime.variables, 0)
        k = local_colength(list(comp.generators) + [z0])
        if k == INFINITE:
            raise ImproperIntersection(f"V(z0) meets V{comp.prime} improperly", stage="lambda1")
        pairs.append((int(k), comp.length))
    return sum(a * b for a, b in pairs), pairs


def check_genericity(f: Polynomial, decomp, lambda1_cycle=None) -> GenericityReport:
    partial = [f.derivative(i) for i in range(1, f.nvars)]
    z0 = Polynomial.var(f.variables, 0)
    slice_ok = local_dimension([z0] + partial, f.nvars) == 0
    jac_ok = local_dimension(partial, f.nvars) == 1
    if lambda1_cycle is None:
        _, lambda1_cycle = split_polar_le(decomp, f.derivative(0)) if decomp is not None else ((), ())
    transversal = []
    for comp in lambda1_cycle:
        k = local_colength(list(comp.generators) + [z0])
        transversal.append(k != INFINITE and k == comp.mult_origin)
    return GenericityReport(slice_ok, tuple(transversal), jac_ok)


def _branch_interval(comps) -> tuple:
    lo = hi = 0
    for c in comps:
        if c.branches is not None:
            lo += c.branches
            hi += c.branches
        else:
            lo += 1
            hi += c.mult_origin
    return lo, hi


def analyze(f: Polynomial, config: SplitConfig | None = None) -> LeAnalysis:
    """Run the full pipeline on ``f``; genericity failures give an INVALID result."""
    cfg = config or SplitConfig()
    if f.nvars < 3:
        raise ValueError("analysis needs at least three variables (z0, z1, z2, ...)")
    n = f.nvars - 1
    partial, _ = jacobian_scheme(f)
    dfdz0 = f.derivative(0)
    z0 = Polynomial.var(f.variables, 0)
    slice_ok = local_dimension([z0] + partial, f.nvars) == 0
    jac_ok = local_dimension(partial, f.nvars) == 1
    mult_f = f.order_at_origin() if f.constant_term() == 0 else 0
    if not jac_ok:
        gen = GenericityReport(slice_ok, (), False)
        return LeAnalysis(f, (), (), None, None, None, None, n, gen, mult_f=mult_f,
                          notes=("partial Jacobian scheme is not a curve at the origin",))
    try:
        decomp = split_components(partial, cfg)
    except LeError as exc:
        exc.stage = exc.stage or "split"
        raise
    gamma, lam = split_polar_le(decomp, dfdz0)
    gen = check_genericity(f, decomp, lam)
    l0, polar_int = lambda0(gamma, dfdz0)

    le_int = []
    for comp in lam:
        k = local_colength(list(comp.generators) + [z0])
        le_int.append(None if k == INFINITE else int(k))
    l1 = None if None in le_int else sum(k * c.length for k, c in zip(le_int, lam))
    m = sum(le_int) if all(gen.transversal_ok) and l1 is not None else None
    notes = []
    if not gen.valid:
        notes.append("genericity hypotheses on z0 fail; numbers are not Le numbers")
    return LeAnalysis(
        f=f,
        gamma1=gamma,
        lambda1_cycle=lam,
        lambda0=l0,
        lambda1=l1,
        m=m,
        r=_branch_interval(lam),
        n_ambient=n,
        genericity=gen,
        polar_intersections=polar_int,
        le_intersections=tuple(le_int),
        mult_f=mult_f,
        decomposition=decomp,
        notes=tuple(notes),
    )
