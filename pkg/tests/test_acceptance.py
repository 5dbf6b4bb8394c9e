"""Acceptance criteria: one printed PASS/FAIL line each, exact comparisons, under 10 s apiece."""
import random
import time

import pytest

from lenumbers.classify import classify, classify_analysis, prime_allowed
from lenumbers.components import random_linear_form
from lenumbers.errors import ClassificationError
from lenumbers.ideals import INFINITE, buchberger, local_colength, normal_form
from lenumbers.lecycles import analyze
from lenumbers.lemodule import (
    IntegerMatrix,
    cyclotomic_factor,
    determinant,
    poly_trace,
    possible_char_polys,
    smith_normal_form,
)
from lenumbers.poly import Polynomial, parse_polynomial
from lenumbers.report import read_corpus

from conftest import XYZ, Z3
from oracles import (
    Inconsistent,
    brute_char_polys,
    enumerate_profiles,
    is_prime_slow,
    reducible_mod_p,
    staircase_bfs,
    truncated_colength,
)

TIME_LIMIT = 10.0


def profile_keys(profiles):
    return {(p.b_nm1, p.b_n, p.torsion.kind, p.torsion.allowed_primes) for p in profiles}


def cycle(comps):
    return {(tuple(sorted(str(g.primitive()) for g in c.generators)), c.length) for c in comps}


@pytest.fixture
def report_line(capsys):
    def emit(number, title, fn):
        start = time.perf_counter()
        failures = fn()
        elapsed = time.perf_counter() - start
        if elapsed >= TIME_LIMIT:
            failures.append(f"took {elapsed:.1f}s")
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[acceptance {number}] {status}  {title}  ({elapsed:.2f}s)")
            for f in failures:
                print(f"    {f}")
        assert not failures

    return emit


def expect(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: got {got!r}, want {want!r}")


def test_criterion_1_flagship(report_line):
    def run():
        bad = []
        a = analyze(parse_polynomial("(z^2-x^2-y^2)*(z-x)", XYZ))
        expect(bad, "status", a.status, "VALID")
        expect(bad, "Gamma1", cycle(a.gamma1), {(("x + 3*z", "y"), 1)})
        expect(bad, "Lambda1", cycle(a.lambda1_cycle), {(("x - z", "y"), 3)})
        expect(bad, "lambda0", a.lambda0, 2)
        expect(bad, "lambda1", a.lambda1, 3)
        expect(bad, "profiles", profile_keys(classify_analysis(a)),
               {(1, 0, "SINGLE_CYCLIC", "ALL"), (2, 1, "NONE", "ALL")})
        return bad

    report_line(1, "flagship example: cycles, lambda0 = 2, lambda1 = 3, two profiles", run)


def test_criterion_2_product_with_line(report_line):
    def run():
        bad = []
        a = analyze(parse_polynomial("z1^2+z2^2", Z3))
        expect(bad, "(lambda0, lambda1)", (a.lambda0, a.lambda1), (0, 1))
        expect(bad, "profiles", profile_keys(classify_analysis(a)), {(1, 0, "NONE", "ALL")})
        return bad

    report_line(2, "z1^2+z2^2: lambda0 = 0, lambda1 = 1, profile (1, 0)", run)


def test_criterion_3_lambda1_one(report_line):
    def run():
        bad = []
        a = analyze(parse_polynomial("z2^2-z1^3-z0*z1^2", Z3))
        expect(bad, "(lambda0, lambda1)", (a.lambda0, a.lambda1), (2, 1))
        oracle = truncated_colength([parse_polynomial(t, Z3) for t in ("3*z1+2*z0", "z2", "z1^2")], 4)
        expect(bad, "colength oracle", oracle, 2)
        expect(bad, "profiles", profile_keys(classify_analysis(a)), {(0, 1, "NONE", "ALL")})
        return bad

    report_line(3, "z2^2-z1^3-z0*z1^2: lambda1 = 1, lambda0 = 2, profile (0, 1)", run)


def test_criterion_4_lambda1_two_triple(report_line):
    def run():
        bad = []
        f = analyze(parse_polynomial("(z0^2-z1^2+z2^2)*z2", Z3))
        expect(bad, "f invariants", (f.lambda1, f.lambda0, f.m), (2, 4, 2))
        expect(bad, "f Le cycle", cycle(f.lambda1_cycle), {(("z0 - z1", "z2"), 1), (("z0 + z1", "z2"), 1)})
        g = analyze(parse_polynomial("(z1^2-z0^3+z2)*z2", Z3))
        expect(bad, "g invariants", (g.lambda1, g.lambda0, g.m), (2, 5, 2))
        expect(bad, "g Le cycle", cycle(g.lambda1_cycle), {(("z0^3 - z1^2", "z2"), 1)})
        expect(bad, "g cusp multiplicity", [c.mult_origin for c in g.lambda1_cycle], [2])
        h = analyze(parse_polynomial("z2^2-z1^4-z0*z1^3", Z3))
        expect(bad, "h invariants", (h.lambda1, h.lambda0, h.m, h.mu), (2, 3, 1, [2]))
        expect(bad, "h profiles", profile_keys(classify_analysis(h)),
               {(0, 1, "SINGLE_CYCLIC", "3_OR_1_MOD_6")})
        return bad

    report_line(4, "lambda1 = 2 triple: (4, 2, m=2), (5, 2, m=2), (3, 2, m=1) with the prime rule", run)


def test_criterion_5_square_z0_example(report_line):
    def run():
        bad = []
        a = analyze(parse_polynomial("z2^2-z1^3-z0^2*z1^2", Z3))
        expect(bad, "status", a.status, "VALID")
        expect(bad, "(lambda1, lambda0)", (a.lambda1, a.lambda0), (1, 5))
        expect(bad, "profiles", profile_keys(classify_analysis(a)), {(0, 4, "NONE", "ALL")})
        return bad

    report_line(5, "z2^2-z1^3-z0^2*z1^2: lambda1 = 1, lambda0 = 5, profile (0, 4)", run)


def test_criterion_6_classifier_exhaustive(report_line):
    def run():
        bad = []
        for l0 in range(0, 7):
            for l1 in range(1, 7):
                for m in (None, 1, 2, 3):
                    try:
                        want = enumerate_profiles(l0, l1, m)
                    except Inconsistent:
                        want = "INCONSISTENT"
                    try:
                        got = profile_keys(classify(l0, l1, m=m))
                    except ClassificationError:
                        got = "INCONSISTENT"
                    expect(bad, f"({l0}, {l1}, m={m})", got, want)
        expect(bad, "(3, 3)", profile_keys(classify(3, 3)), {(2, 2, "NONE", "ALL")})
        return bad

    report_line(6, "classifier equals the independent enumerator on the 7 x 6 x 4 grid", run)


def test_criterion_7_prime_rule(report_line):
    def run():
        bad = []
        for p in range(2, 1000):
            if is_prime_slow(p):
                want = reducible_mod_p(p, 1)
                if not (prime_allowed(p) == want == reducible_mod_p(p, -1)):
                    bad.append(f"p = {p}")
        return bad

    report_line(7, "prime rule agrees with reducibility of t^2 +- t + 1 mod p for p < 1000", run)


def _random_poly(rng, variables, terms=3):
    n = len(variables)
    out = {}
    for _ in range(terms):
        out[tuple(rng.randint(0, 2) for _ in range(n))] = rng.randint(-3, 3) or 1
    return Polynomial(variables, out)


def test_criterion_8_property_suites(report_line):
    def run():
        bad = []
        rng = random.Random(8)
        # Groebner: membership of inputs and uniqueness under permutation
        for i in range(15):
            gens = [_random_poly(rng, XYZ) for _ in range(rng.randint(1, 3))]
            G = buchberger(gens)
            if not all(normal_form(g, G).is_zero() for g in gens):
                bad.append(f"membership failed for ideal {i}")
            shuffled = gens[::-1] + gens[:1]
            if buchberger(shuffled).generators != G.generators:
                bad.append(f"reduced basis not unique for ideal {i}")
        # colength staircase oracle on random monomial ideals
        for i in range(200):
            n = rng.choice((2, 3))
            gens = [tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(1, 4))]
            gens += [tuple(rng.randint(1, 5) if j == k else 0 for j in range(n)) for k in range(n) if rng.random() < 0.85]
            polys = [Polynomial.monomial(("a", "b", "c")[:n], m) for m in gens]
            want = staircase_bfs(gens, n)
            got = local_colength(polys)
            if (INFINITE if want is None else want) != got:
                bad.append(f"staircase mismatch on {gens}: {got} vs {want}")
        # cycle reconstruction and the trace bound on every VALID corpus analysis
        for entry in read_corpus():
            if entry.expected.get("status") != "VALID":
                continue
            f = parse_polynomial(entry.poly, entry.variables)
            a = analyze(f)
            partial = [f.derivative(i) for i in range(1, f.nvars)]
            for _ in range(3):
                ell = random_linear_form(f.variables, rng)
                whole = local_colength(partial + [ell])
                parts = sum(c.length * local_colength(list(c.generators) + [ell]) for c in a.decomposition)
                if whole == INFINITE or whole != parts:
                    bad.append(f"{entry.name}: reconstruction {parts} vs {whole}")
            if not a.m - 1 <= a.lambda0:
                bad.append(f"{entry.name}: m - 1 > lambda0")
        # SNF invariants on 500 random matrices
        for i in range(500):
            r, c = rng.randint(1, 8), rng.randint(1, 8)
            A = IntegerMatrix.from_rows([[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)])
            res = smith_normal_form(A)
            ok = res.U @ A @ res.V == res.S
            ok = ok and determinant(res.U) in (1, -1) and determinant(res.V) in (1, -1)
            ok = ok and all(b % a == 0 if a else b == 0 for a, b in zip(res.diag, res.diag[1:]))
            ok = ok and all(res.S[p, q] == 0 for p in range(r) for q in range(c) if p != q)
            if not ok:
                bad.append(f"SNF invariant failed on matrix {i}")
        # admissible characteristic polynomials versus brute force
        for degree in range(1, 5):
            for trace in range(-degree - 1, degree + 2):
                got = possible_char_polys(degree, trace)
                if set(got) != brute_char_polys(degree, trace):
                    bad.append(f"charpolys({degree}, {trace})")
                if any(cyclotomic_factor(q) is None or poly_trace(q) != trace for q in got):
                    bad.append(f"charpolys({degree}, {trace}) not cyclotomic")
        return bad

    report_line(8, "property suites: Groebner, staircase, reconstruction, SNF, charpolys, trace bound", run)
