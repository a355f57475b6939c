"""The generic monic polynomial and its Hasse derivatives.

Ring conventions: roots are ``x1..xn``; where the indeterminate of ``f`` is
needed it is an extra last variable printed ``x``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from ..algebra.fields import QQ, Field
from ..algebra.polynomial import PolyRing, Polynomial
from ..errors import UsageError


def root_polynomial(n: int, field: Field = QQ) -> Polynomial:
    """``(x - x1)(x - x2)...(x - xn)`` expanded, in ``x1..xn, x``."""
    if n < 1:
        raise UsageError(f"degree n must be >= 1, got {n}")
    R = PolyRing.roots(n, field, aux=True)
    x = R.gen(n)
    f = R.one
    for j in range(n):
        f = f * (x - R.gen(j))
    return f


def root_coefficients(n: int, field: Field = QQ) -> list[Polynomial]:
    """``[a_0, ..., a_n]`` with ``f = sum a_j x^j`` (``a_n = 1``), in the root ring ``x1..xn``."""
    f = root_polynomial(n, field)
    R = PolyRing.roots(n, field)
    coeffs = [R.zero for _ in range(n + 1)]
    acc: list[dict] = [{} for _ in range(n + 1)]
    for e, c in f.terms:
        acc[e[n]][e[:n]] = c
    for j in range(n + 1):
        coeffs[j] = Polynomial(R, acc[j])
    return coeffs


def _check(n: int, i: int, k: int | None = None):
    if n < 2:
        raise UsageError(f"Hasse derivatives H_i with 1 <= i <= n-1 need n >= 2, got n={n}")
    if not 1 <= i <= n - 1:
        raise UsageError(f"derivative order i={i} outside 1..{n - 1}")
    if k is not None and not 1 <= k <= n:
        raise UsageError(f"root index k={k} outside 1..{n}")


def hasse_at_root_subsets(n: int, i: int, k: int, field: Field = QQ) -> Polynomial:
    """``H_i(f)(x_k)`` as a sum over (n-i)-subsets of products ``(x_k - x_j)``."""
    _check(n, i, k)
    R = PolyRing.roots(n, field)
    xk = R.gen(k - 1)
    diffs = [xk - R.gen(j) for j in range(n)]
    total = R.zero
    for subset in combinations(range(n), n - i):
        if k - 1 in subset:
            continue  # contains the factor x_k - x_k = 0
        term = R.one
        for j in subset:
            term = term * diffs[j]
        total = total + term
    return total


def hasse_via_coefficients(n: int, i: int, field: Field = QQ) -> Polynomial:
    """``H_i(f)(x) = sum_j C(j, i) a_j x^(j-i)`` in ``x1..xn, x``."""
    _check(n, i)
    a = root_coefficients(n, field)
    R = PolyRing.roots(n, field, aux=True)
    x = R.gen(n)
    lift = list(range(n))
    total = R.zero
    for j in range(i, n + 1):
        total = total + a[j].to_ring(R, lift) * comb(j, i) * x ** (j - i)
    return total


def at_root(g: Polynomial, k: int) -> Polynomial:
    """Substitute ``x := x_k`` in a polynomial over ``x1..xn, x`` and drop ``x``."""
    n = g.ring.nvars - 1
    if g.ring.names[-1] != "x":
        raise UsageError("expected the auxiliary variable x in the last slot")
    R = PolyRing.roots(n, g.ring.field)
    return g.to_ring(R, list(range(n)) + [k - 1])


def ordinary_derivative(n: int, i: int, field: Field = QQ) -> Polynomial:
    """``f^(i)(x)`` by repeated formal differentiation of the root polynomial."""
    g = root_polynomial(n, field)
    for _ in range(i):
        g = g.derivative(n)
    return g


def ordinary_derivative_at_root(n: int, i: int, k: int, field: Field = QQ) -> Polynomial:
    return at_root(ordinary_derivative(n, i, field), k)


@dataclass(frozen=True)
class HasseDerivative:
    n: int
    i: int
    k: int
    polynomial: Polynomial

    @classmethod
    def build(cls, n: int, i: int, k: int, field: Field = QQ, check: bool = True) -> "HasseDerivative":
        """Build from the subset formula; with ``check`` also compare against the coefficient formula."""
        h = hasse_at_root_subsets(n, i, k, field)
        if check:
            other = at_root(hasse_via_coefficients(n, i, field), k)
            if other != h:
                raise AssertionError(f"Hasse formulas disagree for n={n}, i={i}, k={k}")
        return cls(n, i, k, h)

    def scaled_to_ordinary(self) -> Polynomial:
        return self.polynomial * factorial(self.i)
