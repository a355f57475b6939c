"""Branch verification over F_p, pure powers over Q, and related checks."""
from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..algebra.fields import GF, QQ, is_prime, primes_between
from ..algebra.orders import MonomialOrder
from ..algebra.polynomial import PolyRing
from ..errors import BudgetExhausted, OracleMismatchError, UsageError
from ..groebner import (
    Budget, GroebnerBasis, divide, field_equations, groebner, lm_ideal, standard_monomials,
)
from .branch import BranchSpec, branch_ideal, branch_order
from .hasse import hasse_at_root_subsets
from .oracle import DEFAULT_ORACLE_CAP, brute_force_count

log = logging.getLogger(__name__)

GOOD = "good"
BAD = "bad"
INDETERMINATE = "indeterminate"
BUDGET_EXHAUSTED = "budget-exhausted"
BAD_PRIME = "bad-prime"


@dataclass
class VerificationReport:
    n: int
    branch: str
    p: int
    order: str
    sm_count: int | None
    diagonal_verified: bool
    pure_powers: dict[str, int]
    verdict: str
    oracle_count: int | None = None
    elapsed_ms: int | None = None
    detail: str = ""
    bad_denominators: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.verdict == GOOD and (self.oracle_count is None or self.oracle_count == self.sm_count)


def classify(sm_count: int, p: int) -> str:
    """Good at exactly p points, bad from p^2 on; anything between cannot happen."""
    if sm_count == p:
        return GOOD
    if sm_count >= p * p:
        return BAD
    return INDETERMINATE


@lru_cache(maxsize=128)
def _rational_basis(spec: BranchSpec, budget: Budget) -> GroebnerBasis:
    gens = branch_ideal(spec, QQ)
    if not gens:
        return GroebnerBasis((), branch_order(spec), "reduced")
    return groebner(gens, branch_order(spec), budget)


def structural_denominators(spec: BranchSpec, budget: Budget | None = None) -> set[int]:
    """All coefficient denominators of the reduced basis of the branch ideal over Q."""
    G = _rational_basis(spec, budget or Budget())
    dens = set()
    for g in G.generators:
        for _, c in g.terms:
            if c.denominator != 1:
                dens.add(c.denominator)
    return dens


def _names(n: int) -> tuple[str, ...]:
    return PolyRing.roots(n).names


def _pure_power_names(pp: dict[int, int], n: int) -> dict[str, int]:
    names = _names(n)
    return {names[i]: pp[i] for i in sorted(pp)}


def fp_basis(spec: BranchSpec, p: int, budget: Budget | None = None,
             order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced basis of ``J + <x_i^p - x_i>`` over F_p."""
    F = GF(p)
    R = PolyRing.roots(spec.n, F)
    gens = branch_ideal(spec, F) + field_equations(R)
    return groebner(gens, order or branch_order(spec), budget)


def verify_branch(spec: BranchSpec, p: int, run_oracle: bool = False, budget: Budget | None = None,
                  oracle_cap: int = DEFAULT_ORACLE_CAP, order: MonomialOrder | None = None) -> VerificationReport:
    """Count standard monomials of ``J + field equations`` over F_p and classify p.

    A prime dividing a denominator of the reduced basis over Q is reported as
    ``bad-prime`` whatever the count.  With ``run_oracle`` the count is checked
    against an exhaustive scan of F_p^n and a disagreement raises
    :class:`OracleMismatchError`.
    """
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    t0 = time.perf_counter()
    budget = budget or Budget()
    order = order or branch_order(spec)
    names = _names(spec.n)
    F = GF(p)
    gens = branch_ideal(spec, F)
    diagonal = all(g(*([a] * spec.n)) == 0 for g in gens for a in range(p))

    report = VerificationReport(spec.n, spec.label, p, order.describe(names), None, diagonal, {},
                                BUDGET_EXHAUSTED)
    try:
        bad = sorted(d for d in structural_denominators(spec, budget) if d % p == 0)
        G = fp_basis(spec, p, budget, order)
    except BudgetExhausted as exc:
        report.detail = str(exc)
        report.elapsed_ms = round((time.perf_counter() - t0) * 1000)
        log.warning("n=%d branch=%s p=%d: %s", spec.n, spec.label, p, exc)
        return report

    sm = standard_monomials(G)
    report.sm_count = sm.count
    report.pure_powers = _pure_power_names(sm.pure_powers, spec.n)
    if bad:
        report.verdict = BAD_PRIME
        report.bad_denominators = tuple(bad)
        report.detail = f"p={p} divides structural denominators {bad}"
    else:
        report.verdict = classify(sm.count, p)
        if report.verdict == INDETERMINATE:
            report.detail = f"{p} < |SM| = {sm.count} < {p * p}: impossible for a branch variety"
            log.error("n=%d branch=%s p=%d: %s", spec.n, spec.label, p, report.detail)

    if run_oracle:
        try:
            report.oracle_count = brute_force_count(gens, p, cap=oracle_cap, nvars=spec.n)
        except BudgetExhausted as exc:
            log.info("oracle skipped: %s", exc)
        if report.oracle_count is not None and report.oracle_count != report.sm_count:
            raise OracleMismatchError(
                f"n={spec.n} branch={spec.label} p={p}: |SM|={report.sm_count} but |V(J)|={report.oracle_count}")
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000)
    return report


def _verify_task(args):
    spec, p, run_oracle, budget, oracle_cap = args
    return verify_branch(spec, p, run_oracle, budget, oracle_cap)


def default_jobs(tasks: int) -> int:
    return max(1, min(os.cpu_count() or 1, tasks))


def good_prime_sweep(spec: BranchSpec, p_min: int, p_max: int, run_oracle: bool = False,
                     budget: Budget | None = None, oracle_cap: int = DEFAULT_ORACLE_CAP,
                     jobs: int | None = None) -> list[VerificationReport]:
    """``verify_branch`` for every prime in ``[p_min, p_max]``, ascending."""
    primes = primes_between(p_min, p_max)
    if not primes:
        raise UsageError(f"no primes in [{p_min}, {p_max}]")
    budget = budget or Budget()
    tasks = [(spec, p, run_oracle, budget, oracle_cap) for p in primes]
    jobs = default_jobs(len(tasks)) if jobs is None else max(1, min(jobs, len(tasks)))
    if jobs == 1:
        reports = [_verify_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    return sorted(reports, key=lambda r: r.p)


def first_good(reports: list[VerificationReport]) -> int | None:
    return next((r.p for r in reports if r.verdict == GOOD), None)


def pure_powers_over_Q(spec: BranchSpec, budget: Budget | None = None) -> dict[str, int]:
    """Smallest m with ``x^m`` in the leading-monomial ideal over Q, per variable."""
    G = _rational_basis(spec, budget or Budget())
    if not G.generators:
        return {}
    return _pure_power_names(lm_ideal(G).pure_powers(), spec.n)


def check_finiteness(spec: BranchSpec, budget: Budget | None = None) -> bool:
    """Every variable except the lowest of the branch order has a pure-power leading monomial."""
    order = branch_order(spec)
    names = _names(spec.n)
    pp = pure_powers_over_Q(spec, budget)
    return all(names[i] in pp for i in order.priority[:-1])


def g2_closed_form(n: int) -> Fraction:
    return Fraction((n - 2) * (n * n - 2 * n - 1), 2 * (n - 1))


def g2_coefficient(n: int) -> Fraction:
    """Coefficient of ``x2^2`` in ``H_{n-2}(f)(x2)`` reduced modulo ``H_{n-1}(f)(x1)``.

    The reduction is lex division with x1 highest, i.e. the substitution
    ``x1 = (x2 + ... + xn)/(n-1)``.
    """
    if n < 3:
        raise UsageError(f"G_2 is defined for n >= 3, got {n}")
    h = hasse_at_root_subsets(n, n - 2, 2)
    lin = hasse_at_root_subsets(n, n - 1, 1)
    _, r = divide(h, [lin], MonomialOrder.lex(n))
    e = [0] * n
    e[1] = 2
    return r.coefficient(e)


def g2_textbook_sum(n: int) -> Fraction:
    """The unsimplified form ``(n-2)^2/(n-1) + C(n-2, 2)``."""
    return Fraction((n - 2) ** 2, n - 1) + comb(n - 2, 2)


def char_p_counterexample_check(n: int, p: int) -> bool:
    """``x^n - x^p`` over F_p shares the root 0 with all its derivatives yet is not ``a(x-b)^n``."""
    if not is_prime(p):
        raise UsageError(f"p must be prime, got {p}")
    if n <= p:
        raise UsageError(f"need n > p (n={n}, p={p}); for n = p the polynomial is 0")
    R = PolyRing(GF(p), ("x",))
    x = R.gen(0)
    f = x**n - x**p
    if f(0) != 0:
        return False
    g = f
    for _ in range(1, n):
        g = g.derivative(0)
        if g(0) != 0:
            return False
    # a(x-b)^n with root 0 forces b = 0, i.e. a single monomial a*x^n
    return len(f) >= 2
