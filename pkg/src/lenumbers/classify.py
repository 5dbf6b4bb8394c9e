"""Admissible integral cohomology of the Milnor fibre from Le-number data.

Write H^{n-1} = Z^{b_nm1} (always free) and H^n = Z^{b_n} + T with tau_p
cyclic p-primary summands in T.  The general constraints are

* lambda0 = 0: b_nm1 = mu (= lambda1), b_n = 0, no torsion;
* lambda0 > 0: b_nm1 + tau_p < lambda1 and b_n + tau_p < lambda0 for every p;
* b_nm1 - b_n = lambda1 - lambda0 (rank-nullity for the boundary map);
* b_nm1 <= sum of the mu_C;
* lambda0 = lambda1 forces b_nm1 >= 2 (Lefschetz number of the monodromy is 0).

On top of these, small values of (lambda0, lambda1) get the sharper
case-by-case answers, including the refinements that use m = mult_0|Sigma f|
and r = number of branches.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import ClassificationError, NotPrimeError

ALL_PRIMES = "ALL"
RULE_3_OR_1_MOD_6 = "3_OR_1_MOD_6"


@dataclass(frozen=True)
class TorsionDescriptor:
    """Torsion of H^n.

    ``bound`` is the strict per-prime bound ``tau_p < bound``: 1 for
    ``NONE``, 2 for ``SINGLE_CYCLIC`` (torsion is Z/bZ for some b >= 1) and
    the general strict bound for ``BOUNDED``.
    """

    kind: str
    bound: int
    allowed_primes: str = ALL_PRIMES

    @classmethod
    def from_bound(cls, bound: int, allowed: str = ALL_PRIMES) -> "TorsionDescriptor":
        if bound <= 1:
            return cls("NONE", 1)
        if bound == 2:
            return cls("SINGLE_CYCLIC", 2, allowed)
        return cls("BOUNDED", bound, allowed)

    def allows_prime(self, p: int) -> bool:
        if self.kind == "NONE":
            return False
        return self.allowed_primes == ALL_PRIMES or prime_allowed(p)

    def describe(self) -> str:
        if self.kind == "NONE":
            return "no torsion"
        rule = "" if self.allowed_primes == ALL_PRIMES else ", primes 3 or 1 mod 6"
        if self.kind == "SINGLE_CYCLIC":
            return f"Z/bZ for some b >= 1{rule}"
        return f"tau_p < {self.bound}{rule}"


NO_TORSION = TorsionDescriptor("NONE", 1)


@dataclass(frozen=True)
class CohomologyProfile:
    b_nm1: int
    b_n: int
    torsion: TorsionDescriptor
    source: str
    open_example: bool = False
    notes: tuple = field(default=(), compare=False)

    @property
    def key(self) -> tuple:
        t = self.torsion
        return (self.b_nm1, self.b_n, t.kind, t.bound, t.allowed_primes)

    def describe(self, n: int | None = None) -> str:
        lo = "H^{n-1}" if n is None else f"H^{n - 1}"
        hi = "H^n" if n is None else f"H^{n}"
        parts = [f"Z^{self.b_n}"] if self.b_n else []
        if self.torsion.kind != "NONE":
            parts.append(f"T ({self.torsion.describe()})")
        free = f"Z^{self.b_nm1}" if self.b_nm1 else "0"
        return f"{lo} = {free}, {hi} = {' + '.join(parts) or '0'}  [{self.source}]"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_allowed(p: int) -> bool:
    """True iff t^2 +- t + 1 splits mod p, i.e. p == 3 or p = 1 mod 6."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p == 3 or p % 6 == 1


def euler_consistency(profile: CohomologyProfile, l0: int, l1: int) -> bool:
    return profile.b_nm1 - profile.b_n == l1 - l0


def _normalise_r(r):
    if r is None:
        return None, None
    if isinstance(r, int):
        return r, r
    lo, hi = r
    return lo, hi


def _inconsistent(msg: str):
    raise ClassificationError(msg, code="INCONSISTENT")


def _envelope(l0: int, l1: int, mu_sum, source="envelope"):
    out = []
    for b in range(l1):
        bn = b - l1 + l0
        if not 0 <= bn < l0:
            continue
        if l0 == l1 and b < 2:
            continue
        if mu_sum is not None and b > mu_sum:
            continue
        out.append(CohomologyProfile(b, bn, TorsionDescriptor.from_bound(l1 - b), source))
    return out


def _classify_exact(l0, l1, m, r, mu, mult_f):
    """Profiles for one fixed value of the optional data (None = unknown)."""
    mu_sum = sum(mu) if mu is not None else None

    if m is not None:
        if m < 1:
            raise ClassificationError(f"m must be positive, got {m}", code="INVALID_INPUT")
        if m > l1:
            _inconsistent(f"m = {m} exceeds lambda1 = {l1}")
        if m - 1 > l0:
            _inconsistent(f"m - 1 = {m - 1} exceeds lambda0 = {l0} (trace bound)")
    if r is not None:
        if r < 1:
            raise ClassificationError(f"r must be positive, got {r}", code="INVALID_INPUT")
        if m is not None and r > m:
            _inconsistent(f"r = {r} components but multiplicity m = {m}")
    if mu is not None:
        if any(x < 1 for x in mu):
            raise ClassificationError("Milnor numbers must be positive", code="INVALID_INPUT")
        if mu_sum > l1:
            _inconsistent(f"sum of mu = {mu_sum} exceeds lambda1 = {l1}")

    if l0 == 0:
        # smooth critical locus, transverse to V(z0)
        if m not in (None, 1) or r not in (None, 1):
            _inconsistent("lambda0 = 0 needs a smooth critical locus (m = r = 1)")
        if mu is not None and list(mu) != [l1]:
            _inconsistent(f"lambda0 = 0 needs mu = [lambda1] = [{l1}], got {list(mu)}")
        return [CohomologyProfile(l1, 0, NO_TORSION, "lambda0=0")]

    if l1 == 1:
        if l0 < 2:
            _inconsistent("lambda1 = 1 forces lambda0 >= 2")
        if m not in (None, 1) or r not in (None, 1):
            _inconsistent("lambda1 = 1 needs a single smooth component (m = r = 1)")
        return [CohomologyProfile(0, l0 - 1, NO_TORSION, "lambda1=1")]

    if l0 == 1:
        if m not in (None, 2):
            _inconsistent(f"lambda0 = 1 forces m = 2, got m = {m}")
        if mult_f not in (None, 2):
            _inconsistent(f"lambda0 = 1 forces mult_0 f = 2, got {mult_f}")
        if r == 1 and l1 != 2:
            _inconsistent(f"lambda0 = 1 with r = 1 forces lambda1 = 2, got {l1}")
        if mu_sum is not None and l1 - 1 > mu_sum:
            _inconsistent("b_{n-1} = lambda1 - 1 exceeds the sum of mu")
        notes = ("no example of lambda0 = 1, lambda1 >= 2 is known",)
        if r == 1:
            notes += ("vertical monodromy around the critical curve must be the identity",)
        return [CohomologyProfile(l1 - 1, 0, NO_TORSION, "lambda0=1", True, notes)]

    if l1 == 2:
        if l0 == 2:
            _inconsistent("lambda1 = 2 forces lambda0 >= 3")
        rule = RULE_3_OR_1_MOD_6 if m == 1 else ALL_PRIMES
        case1 = CohomologyProfile(
            0, l0 - 2, TorsionDescriptor("SINGLE_CYCLIC", 2, rule), "lambda1=2/case-1",
            notes=("char poly of alpha_1 is t^2 +- t + 1",) if m == 1 else (),
        )
        out = [case1]
        if m != 1 and (mu_sum is None or mu_sum >= 1):
            out.append(CohomologyProfile(1, l0 - 1, NO_TORSION, "lambda1=2/case-2"))
        return out

    if l0 == 2:
        rule = RULE_3_OR_1_MOD_6 if m == 2 else ALL_PRIMES
        out = []
        if mu_sum is None or l1 - 2 <= mu_sum:
            out.append(CohomologyProfile(
                l1 - 2, 0, TorsionDescriptor("SINGLE_CYCLIC", 2, rule), "lambda0=2/case-1",
                notes=("char poly of alpha_0 is t^2 +- t + 1",) if m == 2 else (),
            ))
        if m != 2 and (mu_sum is None or l1 - 1 <= mu_sum):
            out.append(CohomologyProfile(l1 - 1, 1, NO_TORSION, "lambda0=2/case-2"))
        if not out:
            _inconsistent("no case survives the bound b_{n-1} <= sum of mu")
        return out

    if l0 == l1 == 3:
        if r == 1:
            if m not in (None, 1):
                _inconsistent("lambda0 = lambda1 = 3 with r = 1 forces m = 1")
            if mu is not None and list(mu) != [3]:
                _inconsistent("lambda0 = lambda1 = 3 with r = 1 forces mu = 3")
        if mu_sum is not None and mu_sum < 2:
            _inconsistent("b_{n-1} = 2 exceeds the sum of mu")
        notes = ("no example of lambda0 = lambda1 = 3 is known",)
        return [CohomologyProfile(2, 2, NO_TORSION, "lambda0=lambda1=3", True, notes)]

    out = _envelope(l0, l1, mu_sum)
    if not out:
        _inconsistent("no profile satisfies the general constraints")
    return out


def _merge(profiles):
    seen = {}
    for p in profiles:
        if p.key in seen:
            old = seen[p.key]
            seen[p.key] = replace(old, notes=tuple(dict.fromkeys(old.notes + p.notes)))
        else:
            seen[p.key] = p
    return sorted(seen.values(), key=lambda p: p.key)


def classify(l0: int, l1: int, m: int | None = None, r=None, mu=None, mult_f: int | None = None,
             n: int | None = None) -> list:
    """All cohomology profiles compatible with the given data.

    ``m``, ``r``, ``mu`` and ``mult_f`` are optional; missing data widens the
    answer.  ``r`` may be an int or an interval ``(lo, hi)``.  ``n`` only
    affects degree labels when rendering and is accepted for symmetry.
    Raises :class:`ClassificationError` (``INVALID_INPUT`` or ``INCONSISTENT``).
    """
    if l1 is None or l0 is None or l1 < 1 or l0 < 0:
        raise ClassificationError(
            f"lambda1 must be >= 1 and lambda0 >= 0 (got {l0}, {l1})", code="INVALID_INPUT"
        )
    lo, hi = _normalise_r(r)
    if lo is not None and lo == hi:
        return _merge(_classify_exact(l0, l1, m, lo, mu, mult_f))

    unrefined = _classify_exact(l0, l1, m, None, mu, mult_f)
    if lo is None or lo > 1:
        return _merge(unrefined)
    # r unknown but possibly 1: report both readings, labelled
    try:
        refined = _classify_exact(l0, l1, m, 1, mu, mult_f)
    except ClassificationError:
        refined = []
    refined_keys = {p.key for p in refined}
    labelled = []
    for p in unrefined:
        tag = "consistent with r = 1" if p.key in refined_keys else "requires r >= 2"
        labelled.append(replace(p, notes=p.notes + (tag,)))
    return _merge(labelled + [replace(p, notes=p.notes + ("assuming r = 1",)) for p in refined])


def classify_analysis(analysis) -> list:
    """Classify a VALID :class:`~lenumbers.lecycles.LeAnalysis`."""
    if not analysis.valid:
        raise ClassificationError("analysis is INVALID; the coordinates are not generic", code="INVALID_INPUT")
    # mu is per complex branch; a rational component with k branches contributes k copies
    comps = analysis.lambda1_cycle
    mu = None
    if all(c.branches is not None for c in comps):
        mu = [c.length for c in comps for _ in range(c.branches)]
    return classify(
        analysis.lambda0,
        analysis.lambda1,
        m=analysis.m,
        r=analysis.r,
        mu=mu,
        mult_f=analysis.mult_f or None,
        n=analysis.n_ambient,
    )
