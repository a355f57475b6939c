"""Branch specifications, branch ideals and the branch lex order."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from ..algebra.fields import QQ, Field
from ..algebra.orders import MonomialOrder
from ..algebra.polynomial import PolyRing, Polynomial
from ..errors import UsageError
from .hasse import hasse_at_root_subsets, ordinary_derivative_at_root

FULL_CA_CAP = 4


@dataclass(frozen=True)
class BranchSpec:
    """Degree ``n`` and 1-based root indices ``(i_1, ..., i_{n-1})``.

    Generator ``j`` of the branch ideal is ``H_j(f)(x_{i_j})``.  Repeated
    indices are allowed.
    """

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise UsageError(f"degree n must be a positive integer, got {self.n!r}")
        idx = tuple(int(i) for i in self.indices)
        if len(idx) != self.n - 1:
            raise UsageError(f"branch for n={self.n} needs {self.n - 1} indices, got {len(idx)}")
        for i in idx:
            if not 1 <= i <= self.n:
                raise UsageError(f"branch index {i} outside 1..{self.n}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def special(cls, n: int) -> "BranchSpec":
        """``i_j = n - j``: the branch ``H_1(f)(x_{n-1}), ..., H_{n-1}(f)(x_1)``."""
        if not isinstance(n, int) or n < 1:
            raise UsageError(f"degree n must be a positive integer, got {n!r}")
        return cls(n, tuple(n - j for j in range(1, n)))

    @classmethod
    def parse(cls, n: int, text: str | None) -> "BranchSpec":
        if text is None or text.strip().lower() in ("", "special"):
            return cls.special(n)
        try:
            idx = tuple(int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise UsageError(f"bad branch {text!r}: expected 'special' or comma-separated indices") from None
        return cls(n, idx)

    @property
    def label(self) -> str:
        return ",".join(map(str, self.indices))

    def is_distinct(self) -> bool:
        return len(set(self.indices)) == len(self.indices)

    def permuted(self, sigma: dict[int, int]) -> "BranchSpec":
        return BranchSpec(self.n, tuple(sigma[i] for i in self.indices))


def branch_ideal(spec: BranchSpec, field: Field = QQ) -> list[Polynomial]:
    """Generators ``H_j(f)(x_{i_j})``, j = 1..n-1 (empty for n = 1)."""
    return [hasse_at_root_subsets(spec.n, j, k, field) for j, k in enumerate(spec.indices, start=1)]


def full_ca_generators(n: int, field: Field = QQ, cap: int = FULL_CA_CAP) -> list[Polynomial]:
    """``F_i = prod_k f^(i)(x_k)`` for i = 1..n-1, refusing ``n > cap``."""
    if n < 1:
        raise UsageError(f"degree n must be >= 1, got {n}")
    if n > cap:
        raise UsageError(f"full CA generators have degree n(n-i); refusing n={n} > cap {cap}")
    R = PolyRing.roots(n, field)
    out = []
    for i in range(1, n):
        out.append(prod((ordinary_derivative_at_root(n, i, k, field) for k in range(1, n + 1)), start=R.one))
    return out


def normalizing_permutation(spec: BranchSpec) -> dict[int, int]:
    """Relabel roots so the index set becomes ``{1..s}``.

    Used indices keep their relative order and go to ``1..s``; unused ones go
    to ``s+1..n`` in increasing order.  Returns old -> new (1-based).
    """
    used = sorted(set(spec.indices))
    unused = [i for i in range(1, spec.n + 1) if i not in set(used)]
    return {old: new for new, old in enumerate(used + unused, start=1)}


def _chain(spec: BranchSpec) -> list[int]:
    """``[y_1, ..., y_{n-1}, n]`` for a spec whose index set is ``{1..s}``."""
    n, idx = spec.n, spec.indices
    if n == 1:
        return [1]
    s = len(set(idx))
    spare = list(range(s + 1, n + 1))
    seen: set[int] = set()
    chain: list[int] = []
    for k in range(1, n):
        i = idx[n - 1 - k]  # i_{n-k}
        if i in seen:
            chain.append(spare.pop(0))
        else:
            chain.append(i)
        seen.add(i)
    assert spare == [n], spare
    return chain + [n]


def branch_order(spec: BranchSpec) -> MonomialOrder:
    """Lex order ``x_low < y_{n-1} < ... < y_1`` from the repeated-index construction.

    ``y_1 = x_{i_{n-1}}``; each later step takes the next index if it is new and
    otherwise the smallest unused root.  Specs whose index set is not an
    initial segment are first relabelled by :func:`normalizing_permutation`;
    the returned order is expressed in the original variables.
    """
    sigma = normalizing_permutation(spec)
    inverse = {v: k for k, v in sigma.items()}
    chain = _chain(spec.permuted(sigma))
    return MonomialOrder("lex", tuple(inverse[c] - 1 for c in chain))


