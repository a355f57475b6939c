"""Monomial orders (lex and grlex) over an arbitrary variable priority."""
from __future__ import annotations

from dataclasses import dataclass, field
from operator import itemgetter
from typing import Callable, Sequence

from ..errors import UsageError

Exponent = tuple[int, ...]

KINDS = ("lex", "grlex")


@dataclass(frozen=True)
class MonomialOrder:
    """A lex or grlex order.

    ``priority[0]`` is the index (0-based) of the most significant variable,
    so ``MonomialOrder("lex", (1, 0))`` orders ``x2 > x1``.
    """

    kind: str
    priority: tuple[int, ...]
    key: Callable[[Exponent], tuple] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown order kind {self.kind!r}")
        prio = tuple(int(i) for i in self.priority)
        if sorted(prio) != list(range(len(prio))):
            raise UsageError(f"priority {self.priority!r} is not a permutation")
        object.__setattr__(self, "priority", prio)
        object.__setattr__(self, "key", _make_key(self.kind, prio))

    def __reduce__(self):
        return (MonomialOrder, (self.kind, self.priority))

    @classmethod
    def lex(cls, nvars: int, priority: Sequence[int] | None = None) -> "MonomialOrder":
        return cls("lex", tuple(range(nvars)) if priority is None else tuple(priority))

    @classmethod
    def grlex(cls, nvars: int, priority: Sequence[int] | None = None) -> "MonomialOrder":
        return cls("grlex", tuple(range(nvars)) if priority is None else tuple(priority))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    @property
    def lowest(self) -> int:
        """Index of the least significant variable."""
        return self.priority[-1]

    def compare(self, a: Exponent, b: Exponent) -> int:
        return compare_monomials(a, b, self)

    def header(self) -> str:
        return f"order={self.kind} priority={','.join(str(i + 1) for i in self.priority)}"

    def describe(self, names: Sequence[str]) -> str:
        """Human form, lowest variable first: ``x5<x3<x4<x1<x2``."""
        sep = "<" if self.kind == "lex" else "<_grlex "
        return sep.join(names[i] for i in reversed(self.priority))

    @classmethod
    def parse(cls, text: str, nvars: int) -> "MonomialOrder":
        """Parse ``lex``, ``grlex``, or ``lex:2,1,3`` (1-based priority, highest first)."""
        kind, _, rest = text.strip().partition(":")
        if not rest:
            return cls(kind, tuple(range(nvars)))
        try:
            prio = tuple(int(t) - 1 for t in rest.split(","))
        except ValueError:
            raise UsageError(f"bad order priority {rest!r}") from None
        if len(prio) != nvars:
            raise UsageError(f"order priority has {len(prio)} entries, ring has {nvars} variables")
        return cls(kind, prio)


def _make_key(kind: str, prio: tuple[int, ...]) -> Callable[[Exponent], tuple]:
    if len(prio) == 0:
        return lambda e: ()
    if len(prio) == 1:
        i = prio[0]
        return lambda e: (e[i],)
    if prio == tuple(range(len(prio))):
        if kind == "lex":
            return tuple
        return lambda e: (sum(e), *e)
    get = itemgetter(*prio)
    if kind == "lex":
        return get
    return lambda e: (sum(e), *get(e))


def compare_monomials(a: Exponent, b: Exponent, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``x^a`` is less than, equal to or greater than ``x^b``."""
    if len(a) != order.nvars or len(b) != order.nvars:
        raise UsageError(f"exponent arity {len(a)}/{len(b)} does not match order arity {order.nvars}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def grlex_key(e: Exponent) -> tuple:
    """Storage order: grlex with identity priority."""
    return (sum(e), *e)
