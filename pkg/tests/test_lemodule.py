import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lenumbers.errors import NotPrimeError, ShapeMismatch
from lenumbers.lemodule import (
    IntegerMatrix,
    char_poly,
    cyclotomic,
    cyclotomic_factor,
    determinant,
    format_intpoly,
    kernel_cokernel,
    mod_p_rank,
    poly_trace,
    possible_char_polys,
    smith_normal_form,
    verify_le_module_candidate,
)

from oracles import brute_char_polys, sympy_cyclotomic_coeffs

M = IntegerMatrix.from_rows


def check_snf(A):
    r = smith_normal_form(A)
    assert r.U @ A @ r.V == r.S
    assert determinant(r.U) in (1, -1) and determinant(r.V) in (1, -1)
    for i in range(A.rows):
        for j in range(A.cols):
            if i != j:
                assert r.S[i, j] == 0
    assert all(d >= 0 for d in r.diag)
    for a, b in zip(r.diag, r.diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    return r


def test_snf_examples():
    r = check_snf(M([[2, 0], [0, 3]]))
    assert r.diag == (1, 6)
    assert check_snf(IntegerMatrix.identity(3)).diag == (1, 1, 1)
    assert check_snf(IntegerMatrix.zeros(2, 3)).diag == (0, 0)


def test_snf_random_500():
    rng = random.Random(2026)
    for _ in range(500):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        A = M([[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)])
        r = check_snf(A)
        # rank over Q agrees with sympy, and the diagonal is invariant under permutation
        assert r.rank == sympy.Matrix(A.to_lists()).rank()
        perm_r = rng.sample(range(rows), rows)
        perm_c = rng.sample(range(cols), cols)
        B = M([[A[i, j] for j in perm_c] for i in perm_r])
        assert smith_normal_form(B).diag == r.diag
        for p in (2, 3, 5, 7, 11):
            if all(d % p for d in r.diag if d):
                assert mod_p_rank(A, p) == r.rank


def test_kernel_cokernel():
    kc = kernel_cokernel(IntegerMatrix.zeros(2, 3))
    assert (kc.kernel_rank, kc.cokernel_free_rank, kc.torsion) == (3, 2, ())
    kc = kernel_cokernel(M([[1, 0], [0, 6]]))
    assert (kc.kernel_rank, kc.cokernel_free_rank, kc.torsion) == (0, 0, (6,))
    assert kc.tau(2) == kc.tau(3) == 1 and kc.tau(5) == 0


@given(st.integers(1, 5), st.integers(1, 5), st.randoms())
@settings(max_examples=50, deadline=None)
def test_rank_nullity(rows, cols, rnd):
    A = M([[rnd.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
    kc = kernel_cokernel(A)
    assert kc.kernel_rank - kc.cokernel_free_rank == cols - rows


def test_mod_p_rank():
    assert mod_p_rank(M([[2]]), 2) == 0
    assert mod_p_rank(M([[1, 0], [0, 6]]), 5) == 2
    assert mod_p_rank(M([[1, 0], [0, 6]]), 3) == 1
    with pytest.raises(NotPrimeError):
        mod_p_rank(M([[1]]), 4)


def test_char_poly_examples():
    assert format_intpoly(char_poly(M([[0, -1], [1, 1]]))) == "t^2-t+1"
    assert char_poly(IntegerMatrix.identity(3)) == (-1, 3, -3, 1)
    assert char_poly(M([[7]])) == (-7, 1)
    with pytest.raises(ShapeMismatch):
        char_poly(M([[1, 2]]))


@given(st.integers(1, 5), st.randoms())
@settings(max_examples=60, deadline=None)
def test_char_poly_matches_sympy(n, rnd):
    A = M([[rnd.randint(-9, 9) for _ in range(n)] for _ in range(n)])
    t = sympy.Symbol("t")
    ref = sympy.Matrix(A.to_lists()).charpoly(t).all_coeffs()
    assert char_poly(A) == tuple(int(c) for c in reversed(ref))


@pytest.mark.parametrize("k", range(1, 40))
def test_cyclotomic_matches_sympy(k):
    assert cyclotomic(k) == sympy_cyclotomic_coeffs(k)


def test_cyclotomic_factor_examples():
    assert cyclotomic_factor((1, -1, 1)) == [6]
    assert cyclotomic_factor((1, -2, 1)) == [1, 1]
    assert cyclotomic_factor((-2, 1)) is None
    assert cyclotomic_factor((1, 1, 1, 1, 1)) == [5]
    assert cyclotomic_factor((1, 0, 3, 0, 1)) is None


def test_possible_char_polys_examples():
    assert [format_intpoly(q) for q in possible_char_polys(2, 1)] == ["t^2-t+1"]
    assert [format_intpoly(q) for q in possible_char_polys(2, -1)] == ["t^2+t+1"]
    assert possible_char_polys(1, 1) == [(-1, 1)]
    assert possible_char_polys(1, 2) == []


@pytest.mark.parametrize("degree", range(1, 5))
def test_possible_char_polys_brute_force(degree):
    for trace in range(-degree - 1, degree + 2):
        got = possible_char_polys(degree, trace)
        assert set(got) == brute_char_polys(degree, trace)
        for q in got:
            ks = cyclotomic_factor(q)
            assert ks is not None and poly_trace(q) == trace


def test_verify_first_example():
    rep = verify_le_module_candidate(M([[1]]), M([[-1]]), M([[-1]]), m=2, n=1)
    failing = [k for k, v in rep.checks.items() if not v]
    assert failing == ["trace_alpha1"]
    assert (rep.kernel_rank, rep.cokernel_free_rank, rep.torsion) == (0, 0, ())


def test_verify_second_example():
    A = M([[0, -1], [1, 1]])
    rep = verify_le_module_candidate(IntegerMatrix.identity(2), A, A, m=2, n=2)
    assert rep.checks["commutes"] and rep.checks["trace_alpha0"] and not rep.checks["trace_alpha1"]
    assert not rep.passed


def test_verify_zero_map():
    rep = verify_le_module_candidate(IntegerMatrix.zeros(2, 3), IntegerMatrix.identity(2), IntegerMatrix.identity(3),
                                     m=1, n=2)
    assert rep.checks["commutes"] and not rep.checks["trace_alpha0"]
    assert rep.kernel_rank == 3 and rep.cokernel_free_rank == 2


def test_verify_consistent_candidate_and_equality_rule():
    # lambda0 = 2, lambda1 = 3, m = 3 = lambda0 + 1 forces char(alpha0) = (t -+ 1)^2
    A0 = IntegerMatrix.identity(2)
    A1 = M([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    D = M([[1, 0, 0], [0, 1, 0]])
    rep = verify_le_module_candidate(D, A0, A1, m=3, n=2)
    assert rep.passed
    assert all(row["consistent"] for row in rep.uct)
    # an order-6 alpha0 breaks the equality rule
    rep = verify_le_module_candidate(D, M([[0, -1], [1, 1]]), A1, m=3, n=2)
    assert not rep.checks["trace_bound_equality"]


def test_verify_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        verify_le_module_candidate(M([[1, 0]]), M([[1]]), M([[1]]), m=1, n=1)
