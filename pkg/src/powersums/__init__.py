"""Exact sums of powers of consecutive integers and their divisibility."""

from powersums.exact_core import binomial, falling_factorial, mod_pow
from powersums.special_numbers import (
    BernoulliConvention,
    bernoulli,
    bernoulli_polynomial_at,
    lucas_coeff,
    stirling2,
)
from powersums.power_sums import (
    Algorithm,
    arith_prog_power_sum,
    block_sum,
    cfz_rhs,
    shifted_block_sum,
    shifted_sum,
    sum_powers,
)
from powersums.faulhaber_poly import (
    Basis,
    Polynomial,
    evaluate_polynomial,
    faulhaber_polynomial,
    to_triangular_basis,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "Basis",
    "BernoulliConvention",
    "Polynomial",
    "arith_prog_power_sum",
    "bernoulli",
    "bernoulli_polynomial_at",
    "binomial",
    "block_sum",
    "cfz_rhs",
    "evaluate_polynomial",
    "falling_factorial",
    "faulhaber_polynomial",
    "lucas_coeff",
    "mod_pow",
    "shifted_block_sum",
    "shifted_sum",
    "stirling2",
    "sum_powers",
    "to_triangular_basis",
]
