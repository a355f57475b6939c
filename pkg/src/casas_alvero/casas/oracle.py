"""Exhaustive common-zero search over F_p^n.

This is the independent check on standard-monomial counts: it never touches
the Groebner machinery, only evaluates the generators at every point.
"""
from __future__ import annotations

import os
from typing import Iterator, Sequence

import numpy as np

from ..algebra.fields import GF, PrimeField
from ..algebra.polynomial import Polynomial
from ..errors import BudgetExhausted, UsageError

DEFAULT_ORACLE_CAP = 10**7
_CHUNK = 1 << 18


def oracle_cap_from_env(default: int = DEFAULT_ORACLE_CAP) -> int:
    return int(os.environ.get("CA_ORACLE_CAP", default))


def _prepare(generators: Sequence[Polynomial], p: int, nvars: int | None):
    if not generators and nvars is None:
        raise UsageError("cannot infer the number of variables from an empty generator list")
    n = generators[0].ring.nvars if generators else nvars
    F = GF(p)
    polys = []
    for g in generators:
        if g.ring.nvars != n:
            raise UsageError("generators must share one ring")
        fld = g.ring.field
        if isinstance(fld, PrimeField) and fld.p != p:
            raise UsageError(f"generator over {fld!r} but oracle asked for p={p}")
        if not isinstance(fld, PrimeField):
            g = g.to_ring(g.ring.with_field(F))
        polys.append([(e, int(c)) for e, c in g.terms])
    return n, polys


def _zero_mask(polys, n: int, p: int, start: int, stop: int) -> tuple[np.ndarray, list[np.ndarray]]:
    idx = np.arange(start, stop, dtype=np.int64)
    coords = [None] * n
    for i in range(n - 1, -1, -1):
        coords[i] = idx % p
        idx = idx // p
    mask = np.ones(stop - start, dtype=bool)
    for terms in polys:
        top = [max((e[i] for e, _ in terms), default=0) for i in range(n)]
        powers = []
        for i in range(n):
            table = [np.ones_like(coords[i])]
            for _ in range(top[i]):
                table.append(table[-1] * coords[i] % p)
            powers.append(table)
        acc = np.zeros(stop - start, dtype=np.int64)
        for e, c in terms:
            t = np.full(stop - start, c % p, dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k] % p
            acc = (acc + t) % p
        mask &= acc == 0
    return mask, coords


def _chunks(total: int) -> Iterator[tuple[int, int]]:
    for start in range(0, total, _CHUNK):
        yield start, min(total, start + _CHUNK)


def _check_budget(p: int, n: int, cap: int) -> int:
    if p < 2:
        raise UsageError(f"p must be prime, got {p}")
    total = p**n
    if total > cap:
        raise BudgetExhausted(f"oracle point count {p}^{n}", cap)
    return total


def brute_force_count(generators: Sequence[Polynomial], p: int, cap: int = DEFAULT_ORACLE_CAP,
                      nvars: int | None = None) -> int:
    """``|V(generators)|`` over F_p^n by exhaustive evaluation."""
    n, polys = _prepare(generators, p, nvars)
    total = _check_budget(p, n, cap)
    count = 0
    for start, stop in _chunks(total):
        mask, _ = _zero_mask(polys, n, p, start, stop)
        count += int(mask.sum())
    return count


def brute_force_variety(generators: Sequence[Polynomial], p: int, cap: int = DEFAULT_ORACLE_CAP,
                        nvars: int | None = None) -> list[tuple[int, ...]]:
    """Common zeros over F_p^n, sorted lexicographically in ``(x1, ..., xn)``."""
    n, polys = _prepare(generators, p, nvars)
    total = _check_budget(p, n, cap)
    out: list[tuple[int, ...]] = []
    for start, stop in _chunks(total):
        mask, coords = _zero_mask(polys, n, p, start, stop)
        cols = [c[mask] for c in coords]
        out.extend(zip(*(col.tolist() for col in cols)) if n else [() for _ in range(int(mask.sum()))])
    return out
