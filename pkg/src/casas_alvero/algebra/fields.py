"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients are plain Python values so the hot loops stay cheap:
``fractions.Fraction`` over Q (always reduced, positive denominator) and
``int`` in ``[0, p)`` over F_p.  The field object owns the arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError, UsageError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


class RationalField:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DomainError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def format(self, c: Fraction) -> str:
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p with residues stored as ints in ``[0, p)``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise UsageError(f"field modulus must be prime, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __call__(self, value) -> int:
        p = self.p
        if isinstance(value, int):
            return value % p
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise DomainError(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(den, -1, p) % p
        raise UsageError(f"cannot coerce {value!r} into F_{p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError(f"division by zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def format(self, c: int) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = RationalField | PrimeField


def parse_field(text: str) -> Field:
    """Parse ``q``/``QQ`` or ``fp:<p>``/``gf:<p>`` (also a bare prime)."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    for prefix in ("fp:", "gf:", "f_", "gf"):
        if t.startswith(prefix):
            t = t[len(prefix):]
            break
    try:
        p = int(t)
    except ValueError:
        raise UsageError(f"unrecognised field {text!r}") from None
    return GF(p)
