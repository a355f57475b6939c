"""Coefficient fields, monomial orders and sparse polynomials."""
from .fields import GF, QQ, Field, PrimeField, RationalField, is_prime, parse_field, primes_between
from .orders import MonomialOrder, compare_monomials, grlex_key
from .polynomial import (
    EXPONENT_LIMIT,
    LeadingData,
    PolyRing,
    Polynomial,
    evaluate,
    format_polynomial,
    leading_data,
    parse_polynomial,
    poly_add,
    poly_mul,
)

__all__ = [
    "EXPONENT_LIMIT", "GF", "QQ", "Field", "LeadingData", "MonomialOrder", "PolyRing",
    "Polynomial", "PrimeField", "RationalField", "compare_monomials", "evaluate",
    "format_polynomial", "grlex_key", "is_prime", "leading_data", "parse_field",
    "parse_polynomial", "poly_add", "poly_mul", "primes_between",
]
