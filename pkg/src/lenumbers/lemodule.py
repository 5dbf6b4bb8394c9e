"""Integer linear algebra for candidate Le-module data (boundary map and monodromies).

Given a boundary map D: Z^lambda1 -> Z^lambda0 and monodromy candidates A0, A1,
these routines compute kernels and cokernels (via Smith normal form), ranks
mod p, characteristic polynomials and their cyclotomic factorisations, and
check the compatibility and trace conditions a genuine Le module satisfies.
Nothing here constructs D, A0 or A1 from a polynomial; candidates are only
validated.

Integer polynomials are tuples of coefficients, lowest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from .classify import is_prime
from .errors import NotPrimeError, ShapeMismatch


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        data = tuple(tuple(int(x) for x in row) for row in data)
        ncols = len(data[0]) if data else (cols or 0)
        if any(len(r) != ncols for r in data):
            raise ShapeMismatch("ragged matrix rows")
        return cls(len(data), ncols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def to_lists(self) -> list:
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntegerMatrix(
            self.rows, other.cols,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries),
        )

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ShapeMismatch("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def determinant(A: IntegerMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not A.is_square:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = A.rows
    M = [list(r) for r in A.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    S: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix
    diag: tuple

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def smith_normal_form(A: IntegerMatrix) -> SNFResult:
    """U*A*V = S with U, V unimodular and diag(S) a divisibility chain."""
    m, n = A.rows, A.cols
    S = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        S[a], S[b] = S[b], S[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in S:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        S[dst] = [x - q * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in S:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        nz = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, S[i][t] // S[t][t])
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, S[t][j] // S[t][t])
            rest = [(abs(S[i][t]), i, "r") for i in range(t + 1, m) if S[i][t]]
            rest += [(abs(S[t][j]), j, "c") for j in range(t + 1, n) if S[t][j]]
            if rest:
                # a remainder is smaller than the pivot: make it the new pivot
                _, k, kind = min(rest)
                if kind == "r":
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    k = min(m, n)
    diag = tuple(S[i][i] for i in range(k))
    as_mat = lambda rows, r, c: IntegerMatrix(r, c, tuple(tuple(x) for x in rows))
    return SNFResult(as_mat(S, m, n), as_mat(U, m, m), as_mat(V, n, n), diag)


@dataclass(frozen=True)
class KernelCokernel:
    kernel_rank: int
    cokernel_free_rank: int
    torsion: tuple  # invariant factors > 1, in divisibility order

    def tau(self, p: int) -> int:
        return sum(1 for d in self.torsion if d % p == 0)


def kernel_cokernel(D: IntegerMatrix) -> KernelCokernel:
    """ker and coker of D: Z^cols -> Z^rows."""
    snf = smith_normal_form(D)
    r = snf.rank
    return KernelCokernel(D.cols - r, D.rows - r, tuple(d for d in snf.diag if d > 1))


def mod_p_rank(A: IntegerMatrix, p: int) -> int:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    M = [[x % p for x in row] for row in A.entries]
    rank, col = 0, 0
    rows, cols = A.rows, A.cols
    while rank < rows and col < cols:
        piv = next((i for i in range(rank, rows) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for i in range(rows):
            if i != rank and M[i][col]:
                f = M[i][col]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# integer polynomials, characteristic polynomials, cyclotomic factors
# ---------------------------------------------------------------------------

def _trim(q: list) -> tuple:
    q = list(q)
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return tuple(q)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int]):
    """Division by a monic ``b``; returns (quotient, remainder)."""
    a, b = list(a), list(b)
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(a) < len(b):
        return (0,), _trim(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [0])


def format_intpoly(q: Sequence[int], var: str = "t") -> str:
    """Compact rendering such as ``t^2-t+1``."""
    parts = []
    for k in range(len(q) - 1, -1, -1):
        c = q[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return s + "".join(sign + body for sign, body in parts[1:])


def char_poly(A: IntegerMatrix) -> tuple:
    """det(t*I - A) by Faddeev-LeVerrier (all divisions are exact)."""
    if not A.is_square:
        raise ShapeMismatch("characteristic polynomial of a non-square matrix")
    n = A.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    a = [list(r) for r in A.entries]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            M[i][i] += c_prev
        AM = [[sum(a[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        coeffs[n - k] = -tr // k
        M = AM
    return tuple(coeffs)


def totient(k: int) -> int:
    result, m, p = k, k, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple:
    """Phi_k as an integer coefficient tuple."""
    q = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            q, r = poly_divmod(q, cyclotomic(d))
            assert r == (0,)
    return tuple(q)


def cyclotomic_indices(max_degree: int) -> list:
    """All k with phi(k) <= max_degree (phi(k) >= sqrt(k/2) bounds the search)."""
    return [k for k in range(1, 2 * max_degree * max_degree + 3) if totient(k) <= max_degree]


def cyclotomic_factor(q: Sequence[int]):
    """Indices k with prod Phi_k == q, or ``None`` when q is not cyclotomic."""
    q = _trim(q)
    deg = len(q) - 1
    if deg < 1 or q[-1] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    ks = []
    for k in cyclotomic_indices(deg):
        phi = cyclotomic(k)
        while len(q) >= len(phi):
            quo, rem = poly_divmod(q, phi)
            if rem != (0,):
                break
            ks.append(k)
            q = quo
    return ks if q == (1,) else None


def poly_trace(q: Sequence[int]) -> int:
    """Sum of roots: minus the subleading coefficient of a monic polynomial."""
    return -q[-2] if len(q) >= 2 else 0


def possible_char_polys(degree: int, trace: int) -> list:
    """Every product of cyclotomic polynomials of the given degree and trace."""
    if degree < 1:
        raise ValueError("degree must be positive")
    ks = cyclotomic_indices(degree)
    found = set()

    def extend(start: int, remaining: int, acc: tuple):
        if remaining == 0:
            if poly_trace(acc) == trace:
                found.add(acc)
            return
        for idx in range(start, len(ks)):
            k = ks[idx]
            d = totient(k)
            if d <= remaining:
                extend(idx, remaining - d, poly_mul(acc, cyclotomic(k)))

    extend(0, degree, (1,))
    return sorted(found)


# ---------------------------------------------------------------------------
# candidate verification
# ---------------------------------------------------------------------------

@dataclass
class LeModuleReport:
    lambda0: int
    lambda1: int
    checks: dict
    kernel_rank: int
    cokernel_free_rank: int
    torsion: tuple
    char_alpha0: tuple
    char_alpha1: tuple
    uct: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_le_module_candidate(D: IntegerMatrix, A0: IntegerMatrix, A1: IntegerMatrix, m: int, n: int,
                               primes: Sequence[int] = (2, 3, 5, 7)) -> LeModuleReport:
    """Check (D, A0, A1) against the structure a Le module must have.

    D maps Z^lambda1 -> Z^lambda0; A1 and A0 are the monodromies on source
    and target.  The report never asserts the candidate *is* the Le module
    of some polynomial.
    """
    l0, l1 = A0.rows, A1.rows
    if not (A0.is_square and A1.is_square and D.rows == l0 and D.cols == l1):
        raise ShapeMismatch(
            f"need D {l0}x{l1}, A0 {l0}x{l0}, A1 {l1}x{l1}; got D {D.rows}x{D.cols}, "
            f"A0 {A0.rows}x{A0.cols}, A1 {A1.rows}x{A1.cols}"
        )
    sign = -1 if n % 2 else 1
    cp0, cp1 = char_poly(A0), char_poly(A1)
    cyc0 = cyclotomic_factor(cp0) if l0 else []
    cyc1 = cyclotomic_factor(cp1) if l1 else []
    checks = {
        "commutes": D @ A1 == A0 @ D,
        "trace_alpha0": A0.trace() == sign * (m - 1),
        "trace_alpha1": A1.trace() == sign * m,
        "alpha0_cyclotomic": cyc0 is not None,
        "alpha1_cyclotomic": cyc1 is not None,
        "trace_bound": m - 1 <= l0,
    }
    if m - 1 == l0 and l0:
        # equality forces all eigenvalues of alpha0 to be the same sign
        plus = (1,)
        minus = (1,)
        for _ in range(l0):
            plus = poly_mul(plus, (1, 1))
            minus = poly_mul(minus, (-1, 1))
        checks["trace_bound_equality"] = cp0 in (plus, minus)
    kc = kernel_cokernel(D)
    uct = []
    for p in primes:
        rp = mod_p_rank(D, p)
        tau = kc.tau(p)
        row = {
            "p": p,
            "rank": rp,
            "ker_dim": l1 - rp,
            "coker_dim": l0 - rp,
            "tau": tau,
            "consistent": (l1 - rp == kc.kernel_rank + tau) and (l0 - rp == kc.cokernel_free_rank + tau),
        }
        uct.append(row)
    if uct:
        checks["uct_consistent"] = all(r["consistent"] for r in uct)
    return LeModuleReport(l0, l1, checks, kc.kernel_rank, kc.cokernel_free_rank, kc.torsion, cp0, cp1, uct)
