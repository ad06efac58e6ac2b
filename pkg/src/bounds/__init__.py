"""
Bounds Module

Two-sided numerical estimation of Schur multiplier norms.

Components:
    - seed_orthogonal: Hadamard / random orthogonal starting points
    - lower_bound_ascend: alternating SVD / polar ascent (lower bound)
    - alternating_sweep: alternating minimum-norm factorization updates
    - upper_bound_factorize: Haagerup factorization search (upper bound)
    - NormEstimator / norm_bounds: certified [lower, upper] intervals
"""

from src.bounds.ascent import AscentResult, lower_bound_ascend
from src.bounds.estimator import NormEstimator, norm_bounds
from src.bounds.factorize import (
    UpperBoundResult,
    alternating_sweep,
    compress_factorization,
    factorization_from_completion,
    factorization_from_witness,
    upper_bound_factorize,
)
from src.bounds.seeds import hadamard_seed, is_power_of_two, random_orthogonal, seed_orthogonal

__all__ = [
    # Seeds
    "hadamard_seed",
    "is_power_of_two",
    "random_orthogonal",
    "seed_orthogonal",
    # Lower bound
    "AscentResult",
    "lower_bound_ascend",
    # Upper bound
    "UpperBoundResult",
    "alternating_sweep",
    "compress_factorization",
    "factorization_from_completion",
    "factorization_from_witness",
    "upper_bound_factorize",
    # Estimation
    "NormEstimator",
    "norm_bounds",
]
