"""
Random Idempotent Checks

Exhaustive sign-matrix experiments and the growth bound for E[||G||]:

- sign averaging: ||eps o A|| <= 4 M for every sign pattern eps, where M
  is the average of ||eps o A|| over all patterns
- lower growth: E[||G(m, n, 1/2)||] >= (1/8) sqrt(k/2) - 1 with k = min(m, n)
- sign survey: mean and maximum of ||eps|| over all m x n sign matrices,
  with the idempotent relation E[||G||] >= (M - 1)/2 for G = (1 + eps)/2
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from loguru import logger

from simulation.engine import RandomGraphEngine
from simulation.models import MonteCarloEstimate, RandomModel
from src.bounds.estimator import NormEstimator
from src.config import BoundsSettings
from src.exceptions import InputError
from src.linalg.dense import as_dense
from src.models.norms import NormBounds

SIGN_CHECK_MAX_DIM = 3
SURVEY_MAX_ENTRIES = 9


def sign_patterns(m: int, n: int) -> Iterator[np.ndarray]:
    """Every m x n matrix with entries in {-1, 1}."""
    for signs in itertools.product((1.0, -1.0), repeat=m * n):
        yield np.array(signs).reshape(m, n)


def sign_normal_form(M: np.ndarray) -> np.ndarray:
    """
    Flip row and column signs so each row, then each column, starts positive.

    Multiplying by diagonal sign matrices leaves the Schur norm unchanged,
    so matrices with the same normal form share a norm.
    """
    N = M.copy()
    for i in range(N.shape[0]):
        nonzero = np.flatnonzero(N[i])
        if nonzero.size and N[i, nonzero[0]] < 0:
            N[i] *= -1
    for j in range(N.shape[1]):
        nonzero = np.flatnonzero(N[:, j])
        if nonzero.size and N[nonzero[0], j] < 0:
            N[:, j] *= -1
    return N + 0.0  # no negative zeros in the memo key


class _SignedBounds:
    """Estimator bounds memoised on the sign normal form."""

    def __init__(self, settings: BoundsSettings | None = None) -> None:
        self.estimator = NormEstimator(settings)
        self.memo: dict[tuple[tuple[int, int], bytes], NormBounds] = {}

    def __call__(self, M: np.ndarray) -> NormBounds:
        N = sign_normal_form(M)
        key = (N.shape, N.tobytes())
        if key not in self.memo:
            self.memo[key] = self.estimator.estimate(N)
        return self.memo[key]


@dataclass
class SignAverageReport:
    """Sign-averaging inequality over all sign patterns of A."""

    A: np.ndarray
    mean_norm: float
    max_lower: float
    extremal_signs: np.ndarray
    patterns: int
    non_converged: int
    tol: float

    @property
    def holds(self) -> bool:
        return self.max_lower <= 4.0 * self.mean_norm + self.tol

    def to_dict(self) -> dict[str, Any]:
        return {
            "A": self.A.tolist(),
            "M": self.mean_norm,
            "max_lower": self.max_lower,
            "four_M": 4.0 * self.mean_norm,
            "extremal_signs": self.extremal_signs.astype(int).tolist(),
            "patterns": self.patterns,
            "non_converged": self.non_converged,
            "holds": self.holds,
        }


def sign_average_bound_check(
    A: Any, tol: float = 1e-6, settings: BoundsSettings | None = None
) -> SignAverageReport:
    """
    Check max over eps of ||eps o A|| <= 4 M exhaustively.

    Raises:
        InputError: A has more than three rows or columns
    """
    A = as_dense(A)
    m, n = A.shape
    if m > SIGN_CHECK_MAX_DIM or n > SIGN_CHECK_MAX_DIM:
        raise InputError(f"Sign averaging is exhaustive and limited to 3x3, got {m}x{n}")

    bounds_of = _SignedBounds(settings)
    values: list[float] = []
    max_lower = 0.0
    extremal = np.ones((m, n))
    non_converged = 0
    for signs in sign_patterns(m, n):
        bounds = bounds_of(signs * A)
        values.append(bounds.midpoint if bounds.converged else bounds.upper)
        non_converged += not bounds.converged
        if bounds.lower > max_lower:
            max_lower = bounds.lower
            extremal = signs
    mean_norm = float(np.sum(np.sort(values)) / len(values))

    report = SignAverageReport(A, mean_norm, max_lower, extremal, len(values), non_converged, tol)
    logger.info(
        f"Sign averaging {m}x{n}: M={mean_norm:.6f}, max={max_lower:.6f}, holds={report.holds}"
    )
    return report


@dataclass
class GrowthReport:
    """Empirical E[||G(m, n, 1/2)||] against the square-root growth bound."""

    m: int
    n: int
    estimate: MonteCarloEstimate

    @property
    def k(self) -> int:
        return min(self.m, self.n)

    @property
    def bound(self) -> float:
        return math.sqrt(self.k / 2.0) / 8.0 - 1.0

    @property
    def holds(self) -> bool:
        return self.estimate.mean >= self.bound - 3.0 * self.estimate.std_error

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "bound": self.bound,
            "mean": self.estimate.mean,
            "std_error": self.estimate.std_error,
            "trials": self.estimate.trials,
            "holds": self.holds,
        }


def lower_growth_check(
    m: int,
    n: int,
    trials: int = 200,
    seed: int = 42,
    settings: BoundsSettings | None = None,
    workers: int | None = None,
) -> GrowthReport:
    """Estimate E[||G(m, n, 1/2)||] and compare it with (1/8) sqrt(k/2) - 1."""
    model = RandomModel(m=m, n=n, p=0.5, master_seed=seed)
    estimate = RandomGraphEngine(settings, workers).expected_norm(model, trials)
    report = GrowthReport(m, n, estimate)
    if report.bound < 0:
        logger.debug(f"Growth bound {report.bound:.4f} is negative for k={report.k}")
    return report


@dataclass
class SignSurveyReport:
    """Norms of all m x n sign matrices and the induced idempotent bound."""

    m: int
    n: int
    mean_norm: float
    max_norm: float
    extremal_signs: np.ndarray
    expected_idempotent: float
    distinct: int
    tol: float = 1e-6
    histogram: dict[str, int] = field(default_factory=dict)

    @property
    def existence_bound(self) -> float:
        return 0.25 * math.sqrt(self.m * self.n / (self.m + self.n))

    @property
    def idempotent_bound(self) -> float:
        return 0.5 * (self.mean_norm - 1.0)

    @property
    def existence_holds(self) -> bool:
        return self.max_norm >= self.existence_bound - self.tol

    @property
    def idempotent_holds(self) -> bool:
        return self.expected_idempotent >= self.idempotent_bound - self.tol

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "M": self.mean_norm,
            "max_norm": self.max_norm,
            "extremal_signs": self.extremal_signs.astype(int).tolist(),
            "existence_bound": self.existence_bound,
            "existence_holds": self.existence_holds,
            "expected_idempotent": self.expected_idempotent,
            "idempotent_bound": self.idempotent_bound,
            "idempotent_holds": self.idempotent_holds,
            "distinct_normal_forms": self.distinct,
            "histogram": self.histogram,
        }


def sign_matrix_survey(m: int, n: int, settings: BoundsSettings | None = None) -> SignSurveyReport:
    """
    Survey ||eps|| over every m x n sign matrix.

    E[||G(m, n, 1/2)||] is computed exactly by enumeration for the
    idempotent relation.

    Raises:
        InputError: m * n exceeds nine
    """
    if m * n > SURVEY_MAX_ENTRIES:
        raise InputError(f"Sign survey is exhaustive and limited to m * n <= 9, got {m}x{n}")

    bounds_of = _SignedBounds(settings)
    values: list[float] = []
    max_norm = 0.0
    extremal = np.ones((m, n))
    for signs in sign_patterns(m, n):
        bounds = bounds_of(signs)
        value = bounds.midpoint if bounds.converged else bounds.upper
        values.append(value)
        if value > max_norm:
            max_norm = value
            extremal = signs
    mean_norm = float(np.sum(np.sort(values)) / len(values))

    histogram: dict[str, int] = {}
    for value in values:
        label = f"{value:.6f}"
        histogram[label] = histogram.get(label, 0) + 1

    expected = RandomGraphEngine(settings).exhaustive_norm(RandomModel(m=m, n=n, p=0.5)).mean
    report = SignSurveyReport(
        m, n, mean_norm, max_norm, extremal, expected, len(bounds_of.memo),
        histogram=dict(sorted(histogram.items())),
    )
    logger.info(
        f"Sign survey {m}x{n}: M={mean_norm:.6f}, max={max_norm:.6f}, E||G||={expected:.6f}"
    )
    return report
