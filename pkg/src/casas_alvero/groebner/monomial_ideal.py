"""Monomial ideals, staircases and standard-monomial counting."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from ..algebra.orders import Exponent
from ..errors import TooLargeToEnumerate, UsageError
from .division import divides

DEFAULT_ENUM_CAP = 1_000_000


def minimalize(monomials: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Drop every monomial divisible by another one; result sorted for determinism."""
    uniq = sorted(set(tuple(m) for m in monomials), key=lambda e: (sum(e), e))
    out: list[Exponent] = []
    for m in uniq:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple[Exponent, ...]

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Exponent]) -> "MonomialIdeal":
        mons = [tuple(m) for m in monomials]
        for m in mons:
            if len(m) != nvars or min(m, default=0) < 0:
                raise UsageError(f"bad exponent vector {m} for {nvars} variables")
        return cls(nvars, minimalize(mons))

    def __contains__(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        return any(divides(g, m) for g in self.generators)

    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.generators

    def pure_powers(self) -> dict[int, int]:
        """Variable index -> smallest m with x_i^m in the ideal (absent if none)."""
        out: dict[int, int] = {}
        for g in self.generators:
            support = [i for i, k in enumerate(g) if k]
            if len(support) == 1:
                i = support[0]
                out[i] = min(out.get(i, g[i]), g[i])
            elif not support:
                return {i: 0 for i in range(self.nvars)}
        return out

    def is_zero_dimensional(self) -> bool:
        return len(self.pure_powers()) == self.nvars

    def count_standard(self) -> int | None:
        """Number of monomials outside the ideal, or None when infinite."""
        if not self.is_zero_dimensional():
            return None
        return _count(self.generators, self.nvars)

    def standard_monomials(self, cap: int | None = DEFAULT_ENUM_CAP) -> Iterator[Exponent]:
        """Walk the staircase in lexicographic exponent order."""
        pp = self.pure_powers()
        if len(pp) != self.nvars:
            raise UsageError("the staircase is infinite; nothing to enumerate")
        if cap is not None:
            count = self.count_standard()
            if count > cap:
                raise TooLargeToEnumerate(count, cap)
        bounds = [pp[i] for i in range(self.nvars)]
        gens = self.generators

        def walk(prefix: list[int], i: int):
            if i == self.nvars:
                yield tuple(prefix)
                return
            for k in range(bounds[i]):
                prefix.append(k)
                # prune: a generator supported on the first i+1 variables divides every extension
                head = tuple(prefix)
                if not any(all(g[j] <= head[j] for j in range(i + 1)) and not any(g[i + 1:])
                           for g in gens):
                    yield from walk(prefix, i + 1)
                prefix.pop()

        yield from walk([], 0)


@lru_cache(maxsize=65536)
def _count(gens: tuple[Exponent, ...], nvars: int) -> int:
    """Staircase size by splitting on the first variable's exponent.

    The slice at exponent e of the first variable is the staircase of the
    projections of generators with first entry <= e; it only changes at the
    distinct first entries, so each run of equal slices is counted once.
    """
    if any(not any(g) for g in gens):
        return 0
    if nvars == 0:
        return 1
    bound = min(g[0] for g in gens if not any(g[1:]))
    breaks = sorted({g[0] for g in gens if g[0] < bound} | {0})
    total = 0
    for idx, start in enumerate(breaks):
        stop = breaks[idx + 1] if idx + 1 < len(breaks) else bound
        sub = minimalize(g[1:] for g in gens if g[0] <= start)
        total += (stop - start) * _count(sub, nvars - 1)
    return total


@dataclass(frozen=True)
class StandardMonomialSet:
    nvars: int
    finite: bool
    count: int | None
    pure_powers: dict[int, int]
    monomials: tuple[Exponent, ...] | None = field(default=None)
    note: str | None = None


def lm_ideal(G) -> MonomialIdeal:
    """Minimal generators of the leading-monomial ideal of a Groebner basis."""
    from .buchberger import GROEBNER, _RANK
    if _RANK[G.status] < _RANK[GROEBNER]:
        raise UsageError("lm_ideal needs a Groebner basis")
    if not G.generators:
        raise UsageError("the zero ideal has an empty leading-monomial ideal; ring arity unknown")
    return MonomialIdeal.from_monomials(G.ring.nvars, G.leading_monomials())


def standard_monomials(G, enumerate: bool = False, cap: int = DEFAULT_ENUM_CAP) -> StandardMonomialSet:
    M = G if isinstance(G, MonomialIdeal) else lm_ideal(G)
    pp = M.pure_powers()
    count = M.count_standard()
    if count is None:
        return StandardMonomialSet(M.nvars, False, None, pp)
    mons = None
    note = None
    if enumerate:
        if count > cap:
            note = str(TooLargeToEnumerate(count, cap))
        else:
            mons = tuple(M.standard_monomials(cap=None))
    return StandardMonomialSet(M.nvars, True, count, pp, mons, note)
