"""Exception hierarchy shared by the algebra, Groebner and verification layers."""


class CasasError(Exception):
    """Base class for every error raised by this package."""


class UsageError(CasasError, ValueError):
    """Invalid arguments: arity or ring mismatch, out-of-range indices, bad primes."""


class RingMismatchError(UsageError):
    pass


class DomainError(CasasError, ValueError):
    """A quantity is undefined for the given input (e.g. leading term of 0)."""


class ExponentOverflowError(CasasError, ArithmeticError):
    pass


class BudgetExhausted(CasasError, RuntimeError):
    """A resource cap was hit; this is never a mathematical answer."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"budget exhausted: {what} exceeded limit {limit}")
        self.what = what
        self.limit = limit


class TooLargeToEnumerate(CasasError, RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"too large to enumerate: {count} standard monomials (cap {cap})")
        self.count = count
        self.cap = cap


class OracleMismatchError(CasasError, AssertionError):
    """Brute-force point count disagrees with the standard-monomial count."""
