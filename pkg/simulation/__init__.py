"""
Simulation Module

Random bipartite graph experiments for Schur norms of 0-1 matrices.

Components:
    - models: Random model, per-trial records and estimates
    - engine: Deterministic sampling and Monte Carlo / exhaustive expectation
    - checks: Sign-averaging, growth-bound and sign-matrix experiments

Usage:
    from simulation import RandomModel, expected_norm

    model = RandomModel(m=8, n=8, p=0.5, master_seed=42)
    estimate = expected_norm(model, trials=200)
    print(f"{estimate.mean:.4f} +- {estimate.std_error:.4f}")
"""

from simulation.models import (
    GENERATOR,
    EstimationMode,
    MonteCarloEstimate,
    RandomModel,
    TrialRecord,
)
from simulation.engine import (
    RandomGraphEngine,
    expected_norm,
    sample,
)
from simulation.checks import (
    GrowthReport,
    SignAverageReport,
    SignSurveyReport,
    lower_growth_check,
    sign_average_bound_check,
    sign_matrix_survey,
)

__all__ = [
    # Models
    "GENERATOR",
    "EstimationMode",
    "MonteCarloEstimate",
    "RandomModel",
    "TrialRecord",
    # Engine
    "RandomGraphEngine",
    "expected_norm",
    "sample",
    # Checks
    "GrowthReport",
    "SignAverageReport",
    "SignSurveyReport",
    "lower_growth_check",
    "sign_average_bound_check",
    "sign_matrix_survey",
]
