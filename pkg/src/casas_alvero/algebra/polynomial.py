"""Sparse distributed multivariate polynomials with exact coefficients.

A polynomial is a map exponent-vector -> nonzero coefficient.  The canonical
term list is sorted strictly descending in grlex with identity priority;
leading data under any other order is always requested explicitly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from ..errors import DomainError, ExponentOverflowError, RingMismatchError, UsageError
from .fields import QQ, Field, PrimeField
from .orders import Exponent, MonomialOrder, grlex_key

# Exponents behave like signed 32-bit machine words; exceeding this is an error.
EXPONENT_LIMIT = 2**31 - 1


@dataclass(frozen=True)
class PolyRing:
    field: Field
    names: tuple[str, ...]

    @classmethod
    def roots(cls, n: int, field: Field = QQ, aux: bool = False) -> "PolyRing":
        """``x1..xn``, plus the auxiliary indeterminate ``x`` last when ``aux``."""
        names = tuple(f"x{i}" for i in range(1, n + 1))
        return cls(field, names + ("x",) if aux else names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exp: Sequence[int], c=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise UsageError(f"exponent arity {len(exp)} != ring arity {self.nvars}")
        return Polynomial(self, {exp: self.field(c)})

    def gen(self, i: int) -> "Polynomial":
        """The i-th variable (0-based)."""
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.index(name))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"no variable named {name!r} in {self.names}") from None

    def from_dict(self, terms: Mapping[Exponent, object]) -> "Polynomial":
        f = self.field
        return Polynomial(self, {tuple(e): f(c) for e, c in terms.items()})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(field, self.names)

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.names)}]"


class LeadingData(NamedTuple):
    multidegree: Exponent
    coefficient: object
    monomial: "Polynomial"
    term: "Polynomial"


class Polynomial:
    """Immutable polynomial.  ``terms`` is the canonical descending-grlex tuple."""

    __slots__ = ("ring", "_d", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, object], _clean: bool = False):
        self.ring = ring
        if _clean:
            self._d = dict(terms)
        else:
            n = ring.nvars
            d = {}
            for e, c in terms.items():
                if len(e) != n:
                    raise UsageError(f"exponent arity {len(e)} != ring arity {n}")
                if c:
                    d[e] = c
            self._d = d
        self._terms = None
        self._hash = None

    # -- canonical data ---------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Exponent, object], ...]:
        if self._terms is None:
            self._terms = tuple(sorted(self._d.items(), key=lambda t: grlex_key(t[0]), reverse=True))
        return self._terms

    def as_dict(self) -> dict[Exponent, object]:
        return dict(self._d)

    def monomials(self) -> list[Exponent]:
        return [e for e, _ in self.terms]

    def coefficient(self, exp: Sequence[int]):
        return self._d.get(tuple(exp), self.ring.field.zero)

    def __len__(self):
        return len(self._d)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._d)

    def total_degree(self) -> int:
        if not self._d:
            return -1
        return max(sum(e) for e in self._d)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._d), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._d}) <= 1

    def max_exponent(self) -> int:
        return max((max(e, default=0) for e in self._d), default=0)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _add_dicts(self._d, other._d, self.ring.field, 1), _clean=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _add_dicts(self._d, other._d, self.ring.field, -1), _clean=True)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {e: f.neg(c) for e, c in self._d.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            f = self.ring.field
            return Polynomial(self.ring, {e: f.mul(a, c) for e, a in self._d.items()}, _clean=True)
        self._check(other)
        return Polynomial(self.ring, _mul_dicts(self._d, other._d, self.ring.field), _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        return self * c

    def mul_term(self, exp: Exponent, c) -> "Polynomial":
        f = self.ring.field
        d = {}
        for e, a in self._d.items():
            d[_add_exp(e, exp)] = f.mul(a, c)
        return Polynomial(self.ring, d)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    # -- leading data -----------------------------------------------------

    def leading(self, order: MonomialOrder) -> LeadingData:
        return leading_data(self, order)

    def lm(self, order: MonomialOrder) -> Exponent:
        if not self._d:
            raise DomainError("multidegree of the zero polynomial is undefined")
        return max(self._d, key=order.key)

    def lc(self, order: MonomialOrder):
        return self._d[self.lm(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._d:
            return self
        return self * self.ring.field.inv(self.lc(order))

    # -- evaluation and substitution --------------------------------------

    def __call__(self, *point):
        return evaluate(self, point)

    def substitute(self, values: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``values[i]`` (polynomials in the same ring)."""
        ring = self.ring
        powers: dict[tuple[int, int], Polynomial] = {}
        result = ring.zero
        for e, c in self._d.items():
            keep = tuple(0 if i in values else k for i, k in enumerate(e))
            term = ring.monomial(keep, c)
            for i, v in values.items():
                if e[i]:
                    key = (i, e[i])
                    if key not in powers:
                        powers[key] = v ** e[i]
                    term = term * powers[key]
            result = result + term
        return result

    def to_ring(self, ring: PolyRing, mapping: Sequence[int] | None = None) -> "Polynomial":
        """Move into ``ring``; variable ``i`` goes to ``mapping[i]`` (default: same slot).

        Coefficients are coerced into the target field, so this is also the
        Q -> F_p reduction map.  Variables absent from the mapping must not occur.
        """
        n = ring.nvars
        if mapping is None:
            mapping = list(range(self.ring.nvars))
        f = ring.field
        d: dict[Exponent, object] = {}
        for e, c in self._d.items():
            new = [0] * n
            for i, k in enumerate(e):
                if k:
                    j = mapping[i]
                    if j is None or j >= n:
                        raise UsageError(f"variable {self.ring.names[i]} has no image in {ring!r}")
                    new[j] += k
            t = tuple(new)
            v = f(c)
            d[t] = f.add(d[t], v) if t in d else v
        return Polynomial(ring, d)

    def reduce_mod(self, p: int) -> "Polynomial":
        from .fields import GF
        return self.to_ring(self.ring.with_field(GF(p)))

    def derivative(self, i: int) -> "Polynomial":
        f = self.ring.field
        d = {}
        for e, c in self._d.items():
            if e[i]:
                new = list(e)
                new[i] -= 1
                v = f.mul(c, f(e[i]))
                if v:
                    d[tuple(new)] = v
        return Polynomial(self.ring, d, _clean=True)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Send variable ``i`` to variable ``perm[i]``."""
        return self.to_ring(self.ring, perm)

    # -- text ----------------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ring!r})"


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    e = tuple(x + y for x, y in zip(a, b))
    if max(e, default=0) > EXPONENT_LIMIT:
        raise ExponentOverflowError(f"exponent overflow: {a} + {b} exceeds {EXPONENT_LIMIT}")
    return e


def _add_dicts(a: dict, b: dict, field: Field, sign: int) -> dict:
    out = dict(a)
    if isinstance(field, PrimeField):
        p = field.p
        for e, c in b.items():
            v = (out.get(e, 0) + sign * c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    else:
        for e, c in b.items():
            v = out.get(e, 0) + c if sign > 0 else out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _mul_dicts(a: dict, b: dict, field: Field) -> dict:
    if not a or not b:
        return {}
    top_a = max(max(e, default=0) for e in a)
    top_b = max(max(e, default=0) for e in b)
    if top_a + top_b > EXPONENT_LIMIT:
        raise ExponentOverflowError(
            f"exponent overflow in product: {top_a} + {top_b} exceeds {EXPONENT_LIMIT}")
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    if isinstance(field, PrimeField):
        p = field.p
        return {e: c % p for e, c in out.items() if c % p}
    return {e: c for e, c in out.items() if c}


# -- module-level operations -------------------------------------------------

def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def leading_data(f: Polynomial, order: MonomialOrder) -> LeadingData:
    if order.nvars != f.ring.nvars:
        raise UsageError(f"order arity {order.nvars} != ring arity {f.ring.nvars}")
    alpha = f.lm(order)
    c = f._d[alpha]
    return LeadingData(alpha, c, f.ring.monomial(alpha), f.ring.monomial(alpha, c))


def evaluate(f: Polynomial, point: Sequence):
    ring = f.ring
    if len(point) != ring.nvars:
        raise UsageError(f"point arity {len(point)} != ring arity {ring.nvars}")
    field = ring.field
    pt = [field(v) for v in point]
    if isinstance(field, PrimeField):
        p = field.p
        total = 0
        for e, c in f._d.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t = t * pow(v, k, p) % p
            total += t
        return total % p
    total = field.zero
    for e, c in f._d.items():
        t = c
        for v, k in zip(pt, e):
            if k:
                t *= v ** k
        total += t
    return total


# -- text grammar ------------------------------------------------------------

def format_polynomial(f: Polynomial) -> str:
    """Render as ``c*x1^e1*x2^e2 + ... - ...`` in descending grlex."""
    if f.is_zero():
        return "0"
    fmt = f.ring.field.format
    names = f.ring.names
    out = []
    for idx, (e, c) in enumerate(f.terms):
        neg = c < 0
        mag = -c if neg else c
        factors = [names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k]
        cs = fmt(mag)
        if not factors:
            body = cs
        elif cs == "1":
            body = "*".join(factors)
        else:
            body = "*".join([cs] + factors)
        if idx == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TERM_RE = re.compile(r"\s*([+\-−]?)\s*([^+\-−]+)")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Inverse of :func:`format_polynomial`; also accepts ``**`` and the unicode minus."""
    src = text.strip().replace("**", "^")
    if not src:
        raise UsageError("empty polynomial text")
    field = ring.field
    acc: dict[Exponent, object] = {}
    pos = 0
    for m in _TERM_RE.finditer(src):
        if m.start() != pos:
            raise UsageError(f"cannot parse polynomial near {src[pos:]!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2).strip()
        coeff = field.one
        exp = [0] * ring.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise UsageError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff = field.mul(coeff, field(factor))
                continue
            name, _, power = factor.partition("^")
            try:
                k = int(power) if power else 1
            except ValueError:
                raise UsageError(f"bad exponent in {factor!r}") from None
            exp[ring.index(name.strip())] += k
        if sign in ("-", "−"):
            coeff = field.neg(coeff)
        t = tuple(exp)
        acc[t] = field.add(acc[t], coeff) if t in acc else coeff
    if pos != len(src):
        raise UsageError(f"cannot parse polynomial near {src[pos:]!r}")
    return Polynomial(ring, acc)


def poly_from_terms(ring: PolyRing, terms: Iterable[tuple[Exponent, object]]) -> Polynomial:
    field = ring.field
    acc: dict = {}
    for e, c in terms:
        e = tuple(e)
        v = field(c)
        acc[e] = field.add(acc[e], v) if e in acc else v
    return Polynomial(ring, acc)
