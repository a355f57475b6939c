"""Multivariate division, S-polynomials and field-equation rewriting."""
from __future__ import annotations

import heapq
from typing import Callable, Sequence

from ..algebra.fields import PrimeField
from ..algebra.orders import Exponent, MonomialOrder
from ..algebra.polynomial import Polynomial
from ..errors import DomainError, UsageError

# A divisor as seen by the kernel: (leading exponent, leading coefficient, term dict).
Divisor = tuple[Exponent, object, dict]


def divides(a: Exponent, b: Exponent) -> bool:
    """True when x^a divides x^b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def lcm_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def neg_key(key: Callable[[Exponent], tuple]) -> Callable[[Exponent], tuple]:
    def nk(e):
        k = key(e)
        return tuple(-v for v in k) if isinstance(k, tuple) else (-k,)
    return nk


def reduce_terms(h: dict, divisors: Sequence[Divisor], order: MonomialOrder, p: int | None,
                 quotients: list[dict] | None = None, full: bool = True) -> dict:
    """Divide the term dict ``h`` by ``divisors``; return the remainder dict.

    The first divisor (in list order) whose leading monomial divides the
    current leading term is used.  With ``full=False`` the loop stops at the
    first leading term no divisor can cancel (top reduction).  When
    ``quotients`` is given, ``quotients[i]`` accumulates the quotient terms of
    divisor ``i``.  ``h`` is consumed.
    """
    nkey = neg_key(order.key)
    heap = [(nkey(e), e) for e in h]
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop
    rem: dict = {}
    while heap:
        _, m = pop(heap)
        c = h.get(m)
        if c is None:
            continue
        for i, (lm, lc, terms) in enumerate(divisors):
            if divides(lm, m):
                break
        else:
            rem[m] = h.pop(m)
            if not full:
                for e, v in h.items():
                    rem[e] = v
                h.clear()
                break
            continue
        q = tuple(x - y for x, y in zip(m, lm))
        if p is None:
            coef = c / lc if lc != 1 else c
        else:
            coef = c * pow(lc, -1, p) % p if lc != 1 else c
        if quotients is not None:
            qd = quotients[i]
            v = qd.get(q, 0) + coef
            if p is not None:
                v %= p
            if v:
                qd[q] = v
            else:
                qd.pop(q, None)
        del h[m]
        for e, a in terms.items():
            if e == lm:
                continue
            t = tuple(x + y for x, y in zip(e, q))
            old = h.get(t)
            if old is None:
                v = -coef * a
                if p is not None:
                    v %= p
                h[t] = v
                push(heap, (nkey(t), t))
            else:
                v = old - coef * a
                if p is not None:
                    v %= p
                if v:
                    h[t] = v
                else:
                    del h[t]
    return rem


def _modulus(poly: Polynomial) -> int | None:
    f = poly.ring.field
    return f.p if isinstance(f, PrimeField) else None


def divide(g: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division of ``g`` by ``divisors``.

    Returns ``(quotients, remainder)`` with ``g == sum(a_i * g_i) + r`` and no
    monomial of ``r`` divisible by any leading monomial of the divisors.
    An empty divisor list returns ``([], g)``.
    """
    ring = g.ring
    if order.nvars != ring.nvars:
        raise UsageError(f"order arity {order.nvars} != ring arity {ring.nvars}")
    divs = []
    for d in divisors:
        if d.ring != ring:
            raise UsageError("divisors must live in the same ring as the dividend")
        if d.is_zero():
            raise DomainError("division by the zero polynomial")
        lm = d.lm(order)
        divs.append((lm, d._d[lm], d._d))
    if not divs:
        return [], g
    qs: list[dict] = [{} for _ in divs]
    rem = reduce_terms(dict(g._d), divs, order, _modulus(g), quotients=qs)
    return [Polynomial(ring, q) for q in qs], Polynomial(ring, rem, _clean=True)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L = lcm(LM(f), LM(g))``."""
    if f.is_zero() or g.is_zero():
        raise DomainError("S-polynomial of the zero polynomial is undefined")
    if f.ring != g.ring:
        raise UsageError("ring mismatch")
    field = f.ring.field
    a, b = f.lm(order), g.lm(order)
    L = lcm_exp(a, b)
    fa = f.mul_term(tuple(x - y for x, y in zip(L, a)), field.inv(f._d[a]))
    gb = g.mul_term(tuple(x - y for x, y in zip(L, b)), field.inv(g._d[b]))
    return fa - gb


def fnf_exponent(e: int, p: int) -> int:
    """Reduce one exponent using x^p = x: any e >= p drops to 1 + (e-1) mod (p-1)."""
    if e < p:
        return e
    return 1 + (e - 1) % (p - 1)


def field_normal_form_terms(d: dict, p: int) -> dict:
    out: dict = {}
    for e, c in d.items():
        if max(e, default=0) >= p:
            e = tuple(fnf_exponent(k, p) for k in e)
        v = (out.get(e, 0) + c) % p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def field_normal_form(f: Polynomial, p: int | None = None) -> Polynomial:
    """Rewrite ``f`` modulo the field equations ``x_i^p - x_i``."""
    field = f.ring.field
    if not isinstance(field, PrimeField):
        raise UsageError("field_normal_form needs coefficients in F_p")
    if p is None:
        p = field.p
    elif p != field.p:
        raise UsageError(f"p={p} does not match the coefficient field {field!r}")
    return Polynomial(f.ring, field_normal_form_terms(f._d, p), _clean=True)


def field_equations(ring, p: int | None = None) -> list[Polynomial]:
    """``[x_1^p - x_1, ..., x_n^p - x_n]`` in ``ring``."""
    field = ring.field
    if p is None:
        if not isinstance(field, PrimeField):
            raise UsageError("field equations need a prime field")
        p = field.p
    out = []
    for i in range(ring.nvars):
        e = [0] * ring.nvars
        e[i] = p
        x = ring.gen(i)
        out.append(ring.monomial(e) - x)
    return out


__all__ = [
    "divide", "divides", "field_equations", "field_normal_form", "lcm_exp", "reduce_terms",
    "s_polynomial",
]
