from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from casas_alvero.algebra import GF, QQ, MonomialOrder, PolyRing
from casas_alvero.casas import (
    BAD, BAD_PRIME, BUDGET_EXHAUSTED, GOOD, INDETERMINATE, BranchSpec, HasseDerivative, at_root,
    branch_ideal, branch_order, brute_force_count, brute_force_variety, char_p_counterexample_check,
    check_finiteness, classify, first_good, full_ca_generators, g2_closed_form, g2_coefficient,
    good_prime_sweep, hasse_at_root_subsets, hasse_via_coefficients, normalizing_permutation,
    pure_powers_over_Q, root_coefficients, root_polynomial, structural_denominators, verify_branch,
)
from casas_alvero.casas import report
from casas_alvero.casas.verify import g2_textbook_sum
from casas_alvero.errors import BudgetExhausted, UsageError
from casas_alvero.groebner import Budget


def gens_of(n, field=QQ):
    return PolyRing.roots(n, field).gens()


# -- root polynomial and Hasse derivatives -----------------------------------------

def test_root_polynomial_examples():
    R = PolyRing.roots(1, aux=True)
    a, x = R.gens()
    assert root_polynomial(1) == x - a
    R = PolyRing.roots(2, aux=True)
    a, b, x = R.gens()
    assert root_polynomial(2) == x ** 2 - (a + b) * x + a * b
    c = gens_of(3)
    assert root_coefficients(3)[0] == -c[0] * c[1] * c[2]


def test_hasse_examples():
    for n in range(2, 7):
        xs = gens_of(n)
        assert hasse_at_root_subsets(n, n - 1, 1) == (n - 1) * xs[0] - sum(xs[1:], xs[0].ring.zero)
    a, b, c = gens_of(3)
    assert hasse_at_root_subsets(3, 1, 2) == (b - a) * (b - c)
    a, b = gens_of(2)
    h = hasse_at_root_subsets(2, 1, 1)
    assert h == a - b == at_root(hasse_via_coefficients(2, 1), 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_two_hasse_constructions_agree(n):
    for i in range(1, n):
        for k in range(1, n + 1):
            assert hasse_at_root_subsets(n, i, k) == at_root(hasse_via_coefficients(n, i), k)
            h = HasseDerivative.build(n, i, k)
            from casas_alvero.casas import ordinary_derivative_at_root
            assert h.scaled_to_ordinary() == ordinary_derivative_at_root(n, i, k)


def test_hasse_index_errors():
    for n, i, k in [(1, 1, 1), (3, 0, 1), (3, 3, 1), (3, 1, 4), (3, 1, 0)]:
        with pytest.raises(UsageError):
            hasse_at_root_subsets(n, i, k)


# -- branch ideals and orders -------------------------------------------------------

def test_branch_ideal_examples():
    a, b = gens_of(2)
    (g,) = branch_ideal(BranchSpec(2, (1,)))
    assert g in (a - b, b - a)
    a, b, c = gens_of(3)
    assert branch_ideal(BranchSpec.special(3)) == [(b - a) * (b - c), 2 * a - b - c]
    assert branch_ideal(BranchSpec.special(1)) == []


def test_branch_spec_validation():
    assert BranchSpec.parse(4, "special").indices == (3, 2, 1)
    assert BranchSpec.parse(5, "3,1,1,2").indices == (3, 1, 1, 2)
    for text in ("1", "1,2,1", "0,1", "4,1", "a,b"):
        with pytest.raises(UsageError):
            BranchSpec.parse(3, text)
    with pytest.raises(UsageError):
        BranchSpec.special(0)


def test_full_ca_generators():
    a, b = gens_of(2)
    (F1,) = full_ca_generators(2)
    assert F1 == (2 * a - a - b) * (2 * b - a - b) == -(a - b) ** 2
    for n in (2, 3, 4):
        for F in full_ca_generators(n):
            assert F(*([Fraction(7, 3)] * n)) == 0
    with pytest.raises(UsageError):
        full_ca_generators(5)


def test_branch_order_examples():
    order = branch_order(BranchSpec(5, (3, 1, 1, 2)))
    assert order.describe(PolyRing.roots(5).names) == "x5<x3<x4<x1<x2"
    for n in range(2, 8):
        assert branch_order(BranchSpec.special(n)) == MonomialOrder.lex(n)
    assert branch_order(BranchSpec(2, (1,))).describe(("x1", "x2")) == "x2<x1"


def test_normalizing_permutation():
    assert normalizing_permutation(BranchSpec(5, (3, 1, 1, 2))) == {1: 1, 2: 2, 3: 3, 4: 4, 5: 5}
    assert normalizing_permutation(BranchSpec(4, (4, 4, 2))) == {2: 1, 4: 2, 1: 3, 3: 4}


@settings(max_examples=40)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, n), min_size=n - 1, max_size=n - 1))))
def test_branch_order_is_a_permutation(args):
    n, idx = args
    order = branch_order(BranchSpec(n, tuple(idx)))
    assert sorted(order.priority) == list(range(n))
    # the highest variable is x_{i_{n-1}}, which carries the linear generator
    assert order.priority[0] == idx[-1] - 1


# -- finite-field counting and the oracle ---------------------------------------------

def test_brute_force_examples():
    pts = brute_force_variety(branch_ideal(BranchSpec.special(3), GF(5)), 5)
    assert pts == [(a, a, a) for a in range(5)]
    R = PolyRing.roots(2, GF(3))
    assert brute_force_count([R.zero], 3) == 9
    assert brute_force_variety([R.one], 3) == []
    with pytest.raises(BudgetExhausted):
        brute_force_count([R.zero], 3, cap=8)


def test_oracle_cap_from_env(monkeypatch):
    from casas_alvero.casas.oracle import oracle_cap_from_env
    monkeypatch.setenv("CA_ORACLE_CAP", "123")
    assert oracle_cap_from_env() == 123


@given(st.integers(0, 10_000), st.sampled_from([2, 3, 5]))
@settings(max_examples=25)
def test_oracle_matches_naive_scan(seed, p):
    import random
    from casas_alvero.selfcheck import random_polynomial
    rng = random.Random(seed)
    R = PolyRing.roots(2, GF(p))
    gens = [random_polynomial(R, rng) for _ in range(2)]
    naive = [pt for pt in product(range(p), repeat=2) if all(g(*pt) == 0 for g in gens)]
    assert brute_force_variety(gens, p) == naive


def test_union_of_branches_is_full_variety():
    """Over F_5 with n = 3 the nine branch varieties cover V(F_1, F_2)."""
    p, n = 5, 3
    full = set(brute_force_variety(full_ca_generators(n, GF(p)), p))
    union = set()
    for i1 in range(1, n + 1):
        for i2 in range(1, n + 1):
            union |= set(brute_force_variety(branch_ideal(BranchSpec(n, (i1, i2)), GF(p)), p))
    assert union == full


def test_classify():
    assert classify(7, 7) == GOOD
    assert classify(49, 7) == BAD and classify(343, 7) == BAD
    assert classify(8, 7) == INDETERMINATE


def test_verify_examples():
    r = verify_branch(BranchSpec.special(3), 5, run_oracle=True)
    assert (r.sm_count, r.oracle_count, r.verdict) == (5, 5, GOOD) and r.ok
    r = verify_branch(BranchSpec.special(4), 11)
    assert (r.sm_count, r.verdict) == (11, GOOD)
    assert r.diagonal_verified
    for p in (2, 3, 5, 7, 11):
        r = verify_branch(BranchSpec.special(1), p)
        assert (r.sm_count, r.verdict) == (p, GOOD)


def test_bad_prime():
    r = verify_branch(BranchSpec.special(3), 2)
    assert r.verdict == BAD_PRIME and r.bad_denominators == (2,)
    assert structural_denominators(BranchSpec.special(3)) == {2}
    r = verify_branch(BranchSpec.special(4), 5)
    assert r.verdict == BAD and r.sm_count == 25


def test_verify_budget_exhausted():
    r = verify_branch(BranchSpec.special(4), 13, budget=Budget(max_pairs=1))
    assert r.verdict == BUDGET_EXHAUSTED and r.sm_count is None
    assert "budget exhausted" in r.detail


def test_sweeps():
    reps = good_prime_sweep(BranchSpec.special(3), 3, 13, jobs=1)
    assert [r.p for r in reps] == [3, 5, 7, 11, 13]
    assert all(r.verdict == GOOD for r in reps)
    reps = good_prime_sweep(BranchSpec.special(4), 3, 13, jobs=2)
    assert {r.p for r in reps if r.verdict == GOOD} == {11, 13}
    assert first_good(reps) == 11
    reps = good_prime_sweep(BranchSpec.special(2), 2, 7)
    assert all(r.verdict == GOOD for r in reps)
    with pytest.raises(UsageError):
        good_prime_sweep(BranchSpec.special(2), 8, 10)


def test_sweep_parallel_is_deterministic():
    spec = BranchSpec.special(4)
    serial = report.to_json_lines(good_prime_sweep(spec, 2, 13, jobs=1))
    parallel = report.to_json_lines(good_prime_sweep(spec, 2, 13, jobs=4))
    assert serial == parallel


# -- rational structure --------------------------------------------------------------

def test_pure_powers_and_finiteness():
    assert pure_powers_over_Q(BranchSpec.special(3)) == {"x1": 1, "x2": 2}
    for n in (2, 3, 4):
        assert check_finiteness(BranchSpec.special(n))
    pp = pure_powers_over_Q(BranchSpec.special(4))
    assert pp["x1"] == 1 and pp["x2"] == 2 and pp["x3"] <= 8


def test_g2_examples():
    assert g2_coefficient(3) == Fraction(1, 2)
    assert g2_coefficient(4) == Fraction(7, 3) == g2_closed_form(4)
    for n in range(3, 9):
        assert g2_textbook_sum(n) == g2_closed_form(n)


def test_char_p_counterexample():
    assert char_p_counterexample_check(4, 3)
    assert char_p_counterexample_check(6, 5)
    with pytest.raises(UsageError):
        char_p_counterexample_check(5, 5)


# -- reports ----------------------------------------------------------------------

def test_report_schema():
    r = verify_branch(BranchSpec.special(3), 7, run_oracle=True)
    d = report.report_dict(r)
    assert list(d) == ["n", "branch", "p", "order", "sm_count", "oracle_count", "pure_powers",
                       "verdict", "elapsed_ms"]
    assert d["elapsed_ms"] is None
    assert report.report_dict(r, timing=True)["elapsed_ms"] >= 0
    assert report.parse_json_lines(report.to_json_lines([r])) == [d]
    csv_text = report.to_csv([r])
    head, row = csv_text.splitlines()
    assert head.split(",") == list(report.COLUMNS)
    assert row == "3,\"2,1\",7,x3<x2<x1,7,7,x1=1;x2=1;x3=7,good,"
