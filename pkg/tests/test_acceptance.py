"""Acceptance criteria, one test (and one PASS/FAIL line) per criterion."""
import random
import time
from fractions import Fraction
from math import factorial

from casas_alvero.algebra import GF, QQ, PolyRing
from casas_alvero.casas import (
    GOOD, BranchSpec, at_root, branch_ideal, branch_order, brute_force_count,
    char_p_counterexample_check, g2_closed_form, g2_coefficient, hasse_at_root_subsets,
    hasse_via_coefficients, ordinary_derivative_at_root, pure_powers_over_Q, root_polynomial,
    verify_branch,
)
from casas_alvero.groebner import groebner, ideal_membership
from casas_alvero.selfcheck import check_counting, random_ideal, run_properties

SMALL_CASES = {1: (2, 3, 5, 7), 2: (2, 3, 5, 7), 3: (3, 5, 7, 11), 4: (11, 13)}
ORACLE_CASES = [(2, 3), (2, 5), (3, 3), (3, 5), (3, 7), (4, 5), (4, 11)]


def test_ac1_small_degree_cases(acceptance):
    bad, slowest = [], 0.0
    for n, primes in SMALL_CASES.items():
        for p in primes:
            t0 = time.perf_counter()
            r = verify_branch(BranchSpec.special(n), p)
            dt = time.perf_counter() - t0
            slowest = max(slowest, dt)
            if r.sm_count != p or r.verdict != GOOD or dt >= 60:
                bad.append((n, p, r.sm_count, r.verdict, round(dt, 1)))
    acceptance("AC1 small degrees n = 1..4: sm_count = p and verdict good, each run < 60 s", not bad,
               f"slowest {slowest:.2f} s; failures {bad}" if bad else f"slowest {slowest:.2f} s")


def test_ac2_oracle_equivalence(acceptance):
    mismatches = []
    for n, p in ORACLE_CASES:
        r = verify_branch(BranchSpec.special(n), p)
        pts = brute_force_count(branch_ideal(BranchSpec.special(n), GF(p)), p, nvars=n)
        if pts != r.sm_count:
            mismatches.append((n, p, r.sm_count, pts))
    rng = random.Random(2024)
    for t in range(20):
        p = rng.choice([2, 3, 5, 7])
        gens, order = random_ideal(rng, GF(p), max_vars=3, max_gens=3, max_degree=3)
        problems = check_counting(gens, order)
        if problems:
            mismatches.append((t, p, problems))
    acceptance("AC2 |SM| = |V(J)| for 7 branch cases and 20 random ideals", not mismatches,
               f"mismatches {mismatches}" if mismatches else "")


def test_ac3_g2_closed_form(acceptance):
    wrong = [n for n in range(3, 11) if g2_coefficient(n) != g2_closed_form(n)]
    ok = not wrong and g2_coefficient(3) == Fraction(1, 2)
    acceptance("AC3 G2 reduction equals (n-2)(n^2-2n-1)/(2(n-1)) for 3 <= n <= 10; G2(3) = 1/2", ok,
               f"wrong at n={wrong}" if wrong else "")


def test_ac4_pure_powers(acceptance):
    t0 = time.perf_counter()
    found = {n: pure_powers_over_Q(BranchSpec.special(n)) for n in (3, 4, 5)}
    dt = time.perf_counter() - t0
    ok = all(pp.get("x1") == 1 and pp.get("x2") == 2 for pp in found.values())
    ok = ok and all(found[n].get("x3", 99) <= 8 for n in (4, 5)) and dt < 600
    summary = "; ".join(f"n={n}: m1={pp.get('x1')} m2={pp.get('x2')} m3={pp.get('x3')}"
                        for n, pp in found.items())
    acceptance("AC4 pure powers over Q: m1 = 1, m2 = 2 (n = 3,4,5), m3 <= 8 (n = 4,5), < 10 min", ok,
               f"{summary}; {dt:.2f} s")


def test_ac5_branch_order(acceptance):
    got = branch_order(BranchSpec(5, (3, 1, 1, 2))).describe(PolyRing.roots(5).names)
    acceptance("AC5 branch order for indices (3,1,1,2) is x5<x3<x4<x1<x2", got == "x5<x3<x4<x1<x2", got)


def test_ac6_engine_properties(acceptance):
    res = run_properties(seed=6, trials=100, fields=(QQ, GF(5)))
    acceptance("AC6 Groebner property suite on 100 random generator sets over Q and F5", res.ok,
               f"{res.trials} trials, {len(res.failures)} failures" + (f": {res.failures[:3]}" if res.failures else ""))


def test_ac7_radical_membership(acceptance):
    failures = []
    for n in (3, 4):
        R = PolyRing.roots(n)
        xs = R.gens()
        for k in range(1, n + 1):
            spec = BranchSpec(n, (k,) * (n - 1))
            G = groebner(branch_ideal(spec), branch_order(spec))
            for j in range(1, n + 1):
                if not ideal_membership((xs[j - 1] - xs[k - 1]) ** n, G):
                    failures.append((n, j, k))
    acceptance("AC7 (x_j - x_k)^n lies in J_k for n = 3,4 and all j, k", not failures,
               f"fails at {failures}" if failures else "")


def test_ac8_char_p_counterexample(acceptance):
    cases = [(4, 3), (5, 3), (6, 5)]
    results = {c: char_p_counterexample_check(*c) for c in cases}
    acceptance("AC8 x^n - x^p counterexample for (n,p) = (4,3), (5,3), (6,5)", all(results.values()),
               str(results))


def _taylor_identity(n: int) -> bool:
    """f(x + t) = sum_i H_i(f)(x) t^i in x1..xn, x, t."""
    base = PolyRing.roots(n, aux=True)
    R = PolyRing(QQ, base.names + ("t",))
    lift = list(range(n + 1))
    x, t = R.gen(n), R.gen(n + 1)
    f = root_polynomial(n).to_ring(R, lift)
    shifted = f.substitute({n: x + t})
    hs = [f] + [hasse_via_coefficients(n, i).to_ring(R, lift) for i in range(1, n)] + [R.one]
    return shifted == sum((h * t ** i for i, h in enumerate(hs)), R.zero)


def test_ac9_hasse_identities(acceptance):
    failures = []
    for n in range(2, 6):
        for i in range(1, n):
            for k in range(1, n + 1):
                h = hasse_at_root_subsets(n, i, k)
                if h != at_root(hasse_via_coefficients(n, i), k):
                    failures.append(("subset-vs-binomial", n, i, k))
                if h * factorial(i) != ordinary_derivative_at_root(n, i, k):
                    failures.append(("i!H_i", n, i, k))
    for n in range(1, 5):
        if not _taylor_identity(n):
            failures.append(("taylor", n))
    acceptance("AC9 Hasse identities: two formulas agree, i!H_i = f^(i) (n <= 5), Taylor shift (n <= 4)",
               not failures, f"fails {failures}" if failures else "")
