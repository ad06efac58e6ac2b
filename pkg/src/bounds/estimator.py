"""
Two-Sided Norm Estimation

Combines the lower-bound ascent over several orthogonal seeds with the
factorization search into a certified NormBounds interval.
"""

from __future__ import annotations

import numpy as np
from loguru import logger

from src.bounds.ascent import AscentResult, lower_bound_ascend
from src.bounds.factorize import UpperBoundResult, upper_bound_factorize
from src.bounds.seeds import seed_orthogonal
from src.config import BoundsSettings
from src.linalg import as_dense
from src.models.norms import NormBounds


class NormEstimator:
    """
    Estimates ||A||_Schur from both sides.

    Restart 0 uses the Hadamard seed when the padded size is a power of two
    (else a seeded random orthogonal matrix); later restarts use fresh random
    seeds. The factorization search is re-run, warm-started from the ascent
    witness, whenever the lower bound improves, and the restarts stop as soon
    as upper - lower <= tol.
    """

    def __init__(self, settings: BoundsSettings | None = None) -> None:
        """
        Initialize the estimator.

        Args:
            settings: Budgets and tolerances; defaults from BoundsSettings
        """
        self.settings = settings or BoundsSettings()

    def _seed(self, d: int, restart: int) -> np.ndarray:
        return seed_orthogonal(d, seed=self.settings.seed + restart, prefer_hadamard=restart == 0)

    def _ascend(self, A: np.ndarray, d: int, restart: int) -> AscentResult:
        return lower_bound_ascend(
            A,
            U0=self._seed(d, restart),
            max_iters=self.settings.max_iters,
            tol=self.settings.ascent_tol,
        )

    def _factorize(
        self, A: np.ndarray, ascent: AscentResult, previous: UpperBoundResult | None
    ) -> UpperBoundResult:
        return upper_bound_factorize(
            A,
            init=previous.factorization if previous is not None else None,
            max_iters=self.settings.sweep_iters,
            tol=self.settings.tol / 2.0,
            witness=(ascent.x, ascent.y),
            target=ascent.lower,
            refine_sweeps=self.settings.upper_sweeps,
            slsqp_iters=self.settings.slsqp_iters,
        )

    def estimate(self, A: np.ndarray) -> NormBounds:
        """
        Certified interval for the Schur multiplier norm of A.

        Args:
            A: m x n real matrix

        Returns:
            NormBounds; ``converged`` is set iff upper - lower <= tol
        """
        arr = as_dense(A)
        m, n = arr.shape
        d = max(m, n)
        tol = self.settings.tol

        if d == 0 or not np.any(arr):
            ascent = lower_bound_ascend(arr)
            upper = upper_bound_factorize(arr)
            return NormBounds(
                lower=0.0,
                upper=0.0,
                witness_U=ascent.U,
                witness_x=ascent.x,
                witness_y=ascent.y,
                factorization=upper.factorization,
                iterations=0,
                converged=True,
                tol=tol,
                restarts_used=0,
                lower_history=[0.0],
                upper_history=[0.0],
            )

        best: AscentResult | None = None
        upper: UpperBoundResult | None = None
        lower_history: list[float] = []
        upper_history: list[float] = []
        iterations = 0
        restarts_used = 0

        for restart in range(self.settings.restarts):
            restarts_used = restart + 1
            ascent = self._ascend(arr, d, restart)
            iterations += ascent.iterations
            if best is not None and ascent.lower <= best.lower:
                logger.debug(f"Restart {restart}: lower {ascent.lower:.10f} not better")
                continue

            best = ascent
            lower_history.append(best.lower)
            candidate = self._factorize(arr, best, upper)
            if upper is None or candidate.upper < upper.upper:
                upper = candidate
                upper_history.append(upper.upper)
            if upper.upper - best.lower <= tol:
                break

        assert best is not None and upper is not None
        converged = upper.upper - best.lower <= tol
        if not converged:
            logger.warning(
                f"norm_bounds {m}x{n} not converged: lower={best.lower:.10f} "
                f"upper={upper.upper:.10f} after {restarts_used} restarts"
            )
        logger.info(f"norm_bounds {m}x{n}: lower={best.lower:.10f} upper={upper.upper:.10f}")

        return NormBounds(
            lower=best.lower,
            upper=upper.upper,
            witness_U=best.U,
            witness_x=best.x,
            witness_y=best.y,
            factorization=upper.factorization,
            iterations=iterations,
            converged=converged,
            tol=tol,
            restarts_used=restarts_used,
            lower_history=lower_history,
            upper_history=upper_history,
        )


def norm_bounds(
    A: np.ndarray,
    tol: float | None = None,
    restarts: int | None = None,
    max_iters: int | None = None,
    settings: BoundsSettings | None = None,
) -> NormBounds:
    """
    Certified [lower, upper] for ||A||_Schur.

    Explicit arguments override the corresponding fields of ``settings``
    (defaults: tol 1e-6, 8 restarts, 500 ascent iterations).
    """
    overrides = {"tol": tol, "restarts": restarts, "max_iters": max_iters}
    base = settings or BoundsSettings()
    merged = base.model_copy(update={k: v for k, v in overrides.items() if v is not None})
    return NormEstimator(merged).estimate(A)
