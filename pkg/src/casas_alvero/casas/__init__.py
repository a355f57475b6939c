"""Casas-Alvero specific constructions and verification."""
from .branch import (
    BranchSpec, branch_ideal, branch_order, full_ca_generators, normalizing_permutation,
)
from .hasse import (
    HasseDerivative, at_root, hasse_at_root_subsets, hasse_via_coefficients, ordinary_derivative,
    ordinary_derivative_at_root, root_coefficients, root_polynomial,
)
from .oracle import DEFAULT_ORACLE_CAP, brute_force_count, brute_force_variety
from .verify import (
    BAD, BAD_PRIME, BUDGET_EXHAUSTED, GOOD, INDETERMINATE, VerificationReport,
    char_p_counterexample_check, check_finiteness, classify, first_good, fp_basis,
    g2_closed_form, g2_coefficient, good_prime_sweep, pure_powers_over_Q,
    structural_denominators, verify_branch,
)

__all__ = [
    "BAD", "BAD_PRIME", "BUDGET_EXHAUSTED", "DEFAULT_ORACLE_CAP", "GOOD", "INDETERMINATE",
    "BranchSpec", "HasseDerivative", "VerificationReport", "at_root", "branch_ideal",
    "branch_order", "brute_force_count", "brute_force_variety", "char_p_counterexample_check",
    "check_finiteness", "classify", "first_good", "fp_basis", "full_ca_generators",
    "g2_closed_form", "g2_coefficient", "good_prime_sweep", "hasse_at_root_subsets",
    "hasse_via_coefficients", "normalizing_permutation", "ordinary_derivative",
    "ordinary_derivative_at_root", "pure_powers_over_Q", "root_coefficients", "root_polynomial",
    "structural_denominators", "verify_branch",
]
