"""Buchberger's algorithm with the coprime and chain criteria.

Pairs are managed with the Gebauer-Moeller update and selected by smallest
lcm in the active order.  For graded orders this is the normal strategy; for
lex it avoids the coefficient blow-up that degree-first selection causes.
"""
from __future__ import annotations

import bisect
import heapq
import logging
import os
from dataclasses import dataclass, field
from typing import Sequence

from ..algebra.fields import PrimeField
from ..algebra.orders import Exponent, MonomialOrder
from ..algebra.polynomial import Polynomial, format_polynomial
from ..errors import BudgetExhausted, UsageError
from .division import divide, divides, field_normal_form_terms, lcm_exp, reduce_terms

log = logging.getLogger(__name__)

RAW, GROEBNER, REDUCED = "raw", "groebner", "reduced"
_RANK = {RAW: 0, GROEBNER: 1, REDUCED: 2}


@dataclass(frozen=True)
class Budget:
    """Caps on processed S-pairs and on the total degree of intermediate polynomials."""

    max_pairs: int = 200_000
    max_degree: int = 2_000

    def __post_init__(self):
        if self.max_pairs <= 0 or self.max_degree <= 0:
            raise UsageError("budgets must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "Budget":
        kw = {}
        if "CA_BUDGET_PAIRS" in os.environ:
            kw["max_pairs"] = int(os.environ["CA_BUDGET_PAIRS"])
        if "CA_BUDGET_DEGREE" in os.environ:
            kw["max_degree"] = int(os.environ["CA_BUDGET_DEGREE"])
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    status: str = GROEBNER
    # cofactors[i][k]: coefficient of input k in generator i (only when tracked)
    cofactors: tuple[tuple[Polynomial, ...], ...] | None = field(default=None, compare=False)
    inputs: tuple[Polynomial, ...] | None = field(default=None, compare=False)

    @property
    def ring(self):
        return self.generators[0].ring if self.generators else None

    def leading_monomials(self) -> list[Exponent]:
        return [g.lm(self.order) for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` modulo the basis."""
        return divide(f, self.generators, self.order)[1]

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def export(self) -> str:
        lines = [self.order.header()]
        lines += [format_polynomial(g) for g in self.generators]
        return "\n".join(lines) + "\n"

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)



def _field_equation_var(g: Polynomial) -> int | None:
    """Index i when ``g`` is exactly ``x_i^p - x_i`` over F_p."""
    field = g.ring.field
    if not isinstance(field, PrimeField) or len(g._d) != 2:
        return None
    p, n = field.p, g.ring.nvars
    for i in range(n):
        hi = tuple(p if j == i else 0 for j in range(n))
        lo = tuple(1 if j == i else 0 for j in range(n))
        if g._d.get(hi) == 1 and g._d.get(lo) == p - 1:
            return i
    return None


def _has_field_equations(polys: Sequence[Polynomial]) -> bool:
    if not polys:
        return False
    present = {_field_equation_var(g) for g in polys} - {None}
    return len(present) == polys[0].ring.nvars


class _Engine:
    """Mutable working state of one Buchberger run."""

    def __init__(self, ring, order: MonomialOrder, budget: Budget, fnf: bool, ninputs: int | None):
        self.ring = ring
        self.order = order
        self.key = order.key
        fld = ring.field
        self.p = fld.p if isinstance(fld, PrimeField) else None
        self.budget = budget
        self.fnf = fnf and self.p is not None
        self.track = ninputs is not None
        self.ninputs = ninputs
        self.polys: list[tuple[Exponent, dict]] = []  # (lm, monic terms), never removed
        self.cofs: list[list[dict]] = []
        self.active: list[int] = []                   # indices, sorted by LM ascending
        self.active_keys: list[tuple] = []
        self.pairs: set[tuple[int, int]] = set()
        self.heap: list = []
        self.pairs_done = 0

    # -- coefficient helpers ------------------------------------------------

    def _monic(self, d: dict, lm: Exponent) -> tuple[dict, object]:
        lc = d[lm]
        if lc == 1:
            return d, 1
        p = self.p
        if p is None:
            inv = 1 / lc
            return {e: c * inv for e, c in d.items()}, inv
        inv = pow(lc, -1, p)
        return {e: c * inv % p for e, c in d.items()}, inv

    def _check_degree(self, d: dict):
        if d:
            deg = max(sum(e) for e in d)
            if deg > self.budget.max_degree:
                raise BudgetExhausted("intermediate degree", self.budget.max_degree)

    def _lm(self, d: dict) -> Exponent:
        return max(d, key=self.key)

    def _divisors(self):
        return [(self.polys[i][0], 1, self.polys[i][1]) for i in self.active]

    def _reduce(self, d: dict, cof: list[dict] | None):
        if not self.active:
            return d, cof
        if cof is None:
            return reduce_terms(d, self._divisors(), self.order, self.p), None
        qs = [{} for _ in self.active]
        r = reduce_terms(d, self._divisors(), self.order, self.p, quotients=qs)
        for q, i in zip(qs, self.active):
            if q:
                cof = _lin_comb(cof, 1, self.cofs[i], q, -1, self.p)
        return r, cof

    # -- basis growth -------------------------------------------------------

    def add(self, d: dict, cof: list[dict] | None):
        lm = self._lm(d)
        d, inv = self._monic(d, lm)
        if cof is not None and inv != 1:
            cof = [_scale(c, inv, self.p) for c in cof]
        h = len(self.polys)
        self.polys.append((lm, d))
        self.cofs.append(cof)
        self._update(h)

    def _update(self, h: int):
        """Gebauer-Moeller pair update after adding polynomial ``h``."""
        polys = self.polys
        mh = polys[h][0]
        cand = list(self.active)
        lcms = {g: lcm_exp(mh, polys[g][0]) for g in cand}

        def coprime(g):
            return all(a == 0 or b == 0 for a, b in zip(mh, polys[g][0]))

        kept: list[int] = []
        for idx, g in enumerate(cand):
            L = lcms[g]
            if coprime(g):
                kept.append(g)
                continue
            rest = cand[idx + 1:]
            if any(divides(lcms[o], L) for o in rest) or any(divides(lcms[o], L) for o in kept):
                continue
            kept.append(g)
        new_pairs = [(g, h) for g in kept if not coprime(g)]

        stale = []
        for pair in self.pairs:
            a, b = pair
            L = lcm_exp(polys[a][0], polys[b][0])
            if divides(mh, L) and lcm_exp(polys[a][0], mh) != L and lcm_exp(polys[b][0], mh) != L:
                stale.append(pair)
        for pair in stale:
            self.pairs.discard(pair)

        for pair in new_pairs:
            self.pairs.add(pair)
            L = lcms[pair[0]]
            heapq.heappush(self.heap, ((self.key(L), pair), pair))

        keep = [g for g in self.active if not divides(mh, polys[g][0])]
        keep_keys = [self.key(polys[g][0]) for g in keep]
        k = self.key(mh)
        pos = bisect.bisect_right(keep_keys, k)
        keep.insert(pos, h)
        keep_keys.insert(pos, k)
        self.active = keep
        self.active_keys = keep_keys

    def next_pair(self):
        while self.heap:
            _, pair = heapq.heappop(self.heap)
            if pair in self.pairs:
                self.pairs.discard(pair)
                return pair
        return None

    def s_poly(self, i: int, j: int):
        (a, fi), (b, fj) = self.polys[i], self.polys[j]
        L = lcm_exp(a, b)
        ti = tuple(x - y for x, y in zip(L, a))
        tj = tuple(x - y for x, y in zip(L, b))
        p = self.p
        out: dict = {}
        for e, c in fi.items():
            out[tuple(x + y for x, y in zip(e, ti))] = c
        for e, c in fj.items():
            t = tuple(x + y for x, y in zip(e, tj))
            v = out.get(t, 0) - c
            if p is not None:
                v %= p
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        cof = None
        if self.track:
            cof = _lin_comb(self.cofs[i], 1, self.cofs[j], {tj: 1}, -1, p, left_mono=ti)
        return out, cof

    def run(self):
        while True:
            pair = self.next_pair()
            if pair is None:
                return
            self.pairs_done += 1
            if self.pairs_done > self.budget.max_pairs:
                raise BudgetExhausted("S-pair count", self.budget.max_pairs)
            s, cof = self.s_poly(*pair)
            if self.fnf:
                s = field_normal_form_terms(s, self.p)
            if not s:
                continue
            self._check_degree(s)
            r, cof = self._reduce(s, cof)
            if r:
                self._check_degree(r)
                self.add(r, cof)

    def result(self) -> tuple[list[Polynomial], list[list[Polynomial]] | None]:
        ring = self.ring
        gens = [Polynomial(ring, self.polys[i][1], _clean=True) for i in self.active]
        if not self.track:
            return gens, None
        cofs = [[Polynomial(ring, c) for c in self.cofs[i]] for i in self.active]
        return gens, cofs


def _scale(d: dict, c, p) -> dict:
    if p is None:
        return {e: v * c for e, v in d.items()}
    return {e: v * c % p for e, v in d.items() if v * c % p}


def _lin_comb(a: list[dict], sa, b: list[dict], q: dict, sb, p, left_mono: Exponent | None = None):
    """Cofactor update: ``sa * x^left_mono * a + sb * q * b`` componentwise."""
    out = []
    for da, db in zip(a, b):
        acc: dict = {}
        for e, c in da.items():
            t = tuple(x + y for x, y in zip(e, left_mono)) if left_mono else e
            acc[t] = c * sa
        for eq, cq in q.items():
            for e, c in db.items():
                t = tuple(x + y for x, y in zip(e, eq))
                acc[t] = acc.get(t, 0) + sb * cq * c
        if p is not None:
            acc = {e: v % p for e, v in acc.items() if v % p}
        else:
            acc = {e: v for e, v in acc.items() if v}
        out.append(acc)
    return out


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder, budget: Budget | None = None,
               *, field_equations: bool | None = None, track: bool = False) -> GroebnerBasis:
    """Groebner basis of the ideal generated by ``generators``.

    With ``field_equations`` (auto-detected when None: every ``x_i^p - x_i`` is
    among the inputs over F_p) each S-polynomial is first rewritten with
    ``x^p -> x``.  ``track`` records, for every output generator, cofactors
    expressing it in terms of the inputs; it disables the rewriting fast path.
    Raises :class:`BudgetExhausted` rather than return a partial basis.
    """
    generators = list(generators)
    if not generators:
        raise UsageError("buchberger needs at least one generator")
    ring = generators[0].ring
    for g in generators:
        if g.ring != ring:
            raise UsageError("all generators must share one ring")
    if order.nvars != ring.nvars:
        raise UsageError(f"order arity {order.nvars} != ring arity {ring.nvars}")
    budget = budget or Budget()
    if field_equations is None:
        field_equations = _has_field_equations(generators)
    eng = _Engine(ring, order, budget, field_equations and not track,
                  len(generators) if track else None)

    # Inputs enter in ascending-LM order; ties keep the caller's order.
    indexed = [(i, g) for i, g in enumerate(generators) if not g.is_zero()]
    indexed.sort(key=lambda t: order.key(t[1].lm(order)))
    for i, g in indexed:
        d = dict(g._d)
        cof = None
        if track:
            cof = [{} for _ in generators]
            cof[i] = {(0,) * ring.nvars: ring.field.one}
        if eng.fnf and _field_equation_var(g) is None:
            d = field_normal_form_terms(d, eng.p)
        d, cof = eng._reduce(d, cof)
        if d:
            eng._check_degree(d)
            eng.add(d, cof)
    eng.run()
    gens, cofs = eng.result()
    log.debug("buchberger: %d pairs processed, %d generators", eng.pairs_done, len(gens))
    return GroebnerBasis(tuple(gens), order, GROEBNER,
                         tuple(tuple(c) for c in cofs) if cofs is not None else None,
                         tuple(generators) if track else None)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis: monic, minimal, every tail fully reduced."""
    if _RANK[G.status] < _RANK[GROEBNER]:
        raise UsageError("reduce_basis needs a Groebner basis")
    order = G.order
    gens = list(G.generators)
    if not gens:
        return GroebnerBasis((), order, REDUCED)
    ring = gens[0].ring
    field = ring.field
    p = field.p if isinstance(field, PrimeField) else None
    track = G.cofactors is not None
    cofs = [list(c) for c in G.cofactors] if track else [None] * len(gens)

    # minimalise: drop generators whose LM is divisible by another's
    lms = [g.lm(order) for g in gens]
    keep = []
    for i, m in enumerate(lms):
        dominated = False
        for j, o in enumerate(lms):
            if j != i and divides(o, m) and (o != m or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    keep.sort(key=lambda i: order.key(lms[i]))
    gens = [gens[i] for i in keep]
    cofs = [cofs[i] for i in keep]

    out, out_cofs = [], []
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1:]
        if track:
            quots, r = divide(g, others, order)
            c = list(cofs[i])
            other_cofs = cofs[:i] + cofs[i + 1:]
            for q, oc in zip(quots, other_cofs):
                if q:
                    c = [ck - q * ok for ck, ok in zip(c, oc)]
        else:
            divs = [(o.lm(order), o.lc(order), o._d) for o in others]
            r = Polynomial(ring, reduce_terms(dict(g._d), divs, order, p), _clean=True) if divs else g
            c = None
        inv = field.inv(r.lc(order))
        out.append(r * inv)
        out_cofs.append([ck * inv for ck in c] if track else None)
    return GroebnerBasis(tuple(out), order, REDUCED,
                         tuple(tuple(c) for c in out_cofs) if track else None, G.inputs)


def groebner(generators: Sequence[Polynomial], order: MonomialOrder, budget: Budget | None = None,
             **kw) -> GroebnerBasis:
    """Reduced Groebner basis in one call."""
    return reduce_basis(buchberger(generators, order, budget, **kw))


def ideal_membership(f: Polynomial, G: GroebnerBasis) -> bool:
    if _RANK[G.status] < _RANK[GROEBNER]:
        raise UsageError("ideal membership needs a Groebner basis")
    if not G.generators:
        return f.is_zero()
    return divide(f, G.generators, G.order)[1].is_zero()


def is_groebner(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check every S-polynomial of every pair reduces to zero (no criteria used)."""
    from .division import s_polynomial
    polys = [g for g in polys if not g.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            if not divide(s, polys, order)[1].is_zero():
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    order = G.order
    lms = G.leading_monomials()
    for i, g in enumerate(G.generators):
        if g.lc(order) != 1:
            return False
        for e, _ in g.terms:
            for j, m in enumerate(lms):
                if j != i and divides(m, e):
                    return False
    return True
