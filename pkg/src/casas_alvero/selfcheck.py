"""Randomised property checks for the Groebner engine (used by ``props`` and the tests)."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra.fields import QQ, Field, PrimeField
from .algebra.orders import MonomialOrder
from .algebra.polynomial import PolyRing, Polynomial
from .casas.oracle import brute_force_count
from .groebner import (
    Budget, buchberger, divide, field_equations, groebner, is_groebner, is_reduced, reduce_basis,
    standard_monomials,
)


def random_polynomial(ring: PolyRing, rng: random.Random, max_degree: int = 3, max_terms: int = 4,
                      coeff_range: int = 5) -> Polynomial:
    """A nonzero polynomial with up to ``max_terms`` terms of total degree <= ``max_degree``."""
    n = ring.nvars
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            deg = rng.randint(0, max_degree)
            e = [0] * n
            for _ in range(deg):
                e[rng.randrange(n)] += 1
            c = rng.randint(-coeff_range, coeff_range)
            if isinstance(ring.field, PrimeField) or rng.random() < 0.7:
                terms[tuple(e)] = c
            else:
                terms[tuple(e)] = ring.field(f"{c}/{rng.randint(1, 4)}")
        f = ring.from_dict(terms)
        if not f.is_zero():
            return f


def random_ideal(rng: random.Random, field: Field, max_vars: int = 3, max_gens: int = 3,
                 max_degree: int = 3) -> tuple[list[Polynomial], MonomialOrder]:
    n = rng.randint(1, max_vars)
    ring = PolyRing.roots(n, field)
    gens = [random_polynomial(ring, rng, max_degree) for _ in range(rng.randint(1, max_gens))]
    kind = rng.choice(["lex", "grlex"])
    prio = list(range(n))
    rng.shuffle(prio)
    return gens, MonomialOrder(kind, tuple(prio))


@dataclass
class PropertyOutcome:
    trials: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_basis_properties(gens: list[Polynomial], order: MonomialOrder, rng: random.Random,
                           budget: Budget | None = None) -> list[str]:
    """Groebner certificate, reducedness, shuffle invariance, division identity, ideal preservation."""
    problems = []
    G = buchberger(gens, order, budget, track=True)
    if not is_groebner(G.generators, order):
        problems.append("S-polynomial certificate failed")
    for g, cof in zip(G.generators, G.cofactors):
        combo = G.ring.zero
        for c, f in zip(cof, gens):
            combo = combo + c * f
        if combo != g:
            problems.append("cofactor certificate failed")
            break
    R = reduce_basis(G)
    if not is_reduced(R):
        problems.append("reduced basis is not reduced")
    for f in gens:
        if not R.reduce(f).is_zero():
            problems.append("input generator not in output ideal")
            break
    shuffled = list(gens)
    rng.shuffle(shuffled)
    if groebner(shuffled, order, budget).export() != R.export():
        problems.append("reduced basis depends on input order")
    target = random_polynomial(gens[0].ring, rng, 4, 6)
    quots, rem = divide(target, list(gens), order)
    expanded = rem
    for q, g in zip(quots, gens):
        expanded = expanded + q * g
    if expanded != target:
        problems.append("division identity failed")
    from .groebner.division import divides
    lms = [g.lm(order) for g in gens]
    if any(divides(m, e) for e, _ in rem.terms for m in lms):
        problems.append("remainder has a divisible monomial")
    return problems


def check_counting(gens: list[Polynomial], order: MonomialOrder, budget: Budget | None = None) -> list[str]:
    """``|SM(GB(J + field equations))| == |V(J)|`` over the prime field of ``gens``."""
    ring = gens[0].ring
    p = ring.field.p
    G = groebner(list(gens) + field_equations(ring), order, budget)
    sm = standard_monomials(G).count
    pts = brute_force_count(gens, p, nvars=ring.nvars)
    return [] if sm == pts else [f"|SM|={sm} but |V|={pts}"]


def run_properties(seed: int, trials: int, fields: tuple[Field, ...] = (QQ,),
                   counting_primes: tuple[int, ...] = (2, 3, 5, 7), counting_trials: int = 0,
                   budget: Budget | None = None) -> PropertyOutcome:
    rng = random.Random(seed)
    out = PropertyOutcome()
    for t in range(trials):
        fld = fields[t % len(fields)]
        gens, order = random_ideal(rng, fld)
        out.trials += 1
        for msg in check_basis_properties(gens, order, rng, budget):
            out.failures.append(f"trial {t} ({fld!r}, {order.kind}): {msg}")
    from .algebra.fields import GF
    for t in range(counting_trials):
        p = rng.choice(counting_primes)
        gens, order = random_ideal(rng, GF(p))
        out.trials += 1
        for msg in check_counting(gens, order, budget):
            out.failures.append(f"counting trial {t} (p={p}): {msg}")
    return out
