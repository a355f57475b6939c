"""Division, Buchberger's algorithm, reduced bases and standard monomials."""
from .buchberger import (
    GROEBNER, RAW, REDUCED, Budget, GroebnerBasis, buchberger, groebner, ideal_membership,
    is_groebner, is_reduced, reduce_basis,
)
from .division import divide, field_equations, field_normal_form, s_polynomial
from .monomial_ideal import MonomialIdeal, StandardMonomialSet, lm_ideal, standard_monomials

__all__ = [
    "GROEBNER", "RAW", "REDUCED", "Budget", "GroebnerBasis", "MonomialIdeal",
    "StandardMonomialSet", "buchberger", "divide", "field_equations", "field_normal_form",
    "groebner", "ideal_membership", "is_groebner", "is_reduced", "lm_ideal", "reduce_basis",
    "s_polynomial", "standard_monomials",
]
