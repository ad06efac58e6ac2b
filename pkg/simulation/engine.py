"""
Random Graph Engine

Samples G(m, n, p) deterministically per trial and estimates the expected
Schur norm, either by Monte Carlo or by weighting every graph of a small
size by its probability.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any

import numpy as np
from loguru import logger

from simulation.models import EstimationMode, MonteCarloEstimate, RandomModel, TrialRecord
from src.bounds.estimator import NormEstimator
from src.classify.classifier import classify
from src.config import BoundsSettings
from src.exceptions import InputError
from src.graphs.search import canonical_key
from src.models.graph import BiGraph

# Largest m * n accepted by the exhaustive mode
EXHAUSTIVE_LIMIT = 16


def sample(model: RandomModel, trial_index: int) -> BiGraph:
    """The graph of one trial; identical for identical (master_seed, trial_index)."""
    rng = model.rng(trial_index)
    return BiGraph((rng.random((model.m, model.n)) < model.p).astype(np.uint8))


def _run_trial(args: tuple[dict[str, Any], int, dict[str, Any]]) -> TrialRecord:
    """Bound one sampled graph (runs in worker processes)."""
    model_data, index, settings = args
    model = RandomModel.model_validate(model_data)
    G = sample(model, index)
    bounds = NormEstimator(BoundsSettings.model_validate(settings)).estimate(G.as_dense())
    return TrialRecord(index, bounds.lower, bounds.upper, bounds.converged, G.edge_count)


def _aggregate(values: list[float]) -> tuple[float, float]:
    """Mean and standard error, summed in sorted order."""
    ordered = np.sort(np.asarray(values, dtype=float))
    mean = float(np.sum(ordered) / ordered.size)
    if ordered.size < 2:
        return mean, 0.0
    return mean, float(np.std(ordered, ddof=1) / math.sqrt(ordered.size))


class RandomGraphEngine:
    """
    Estimates E[||G||] for G drawn from G(m, n, p).

    Trials are independent and seeded by (master_seed, trial_index), so
    serial and parallel runs give bit-identical estimates.
    """

    def __init__(self, settings: BoundsSettings | None = None, workers: int | None = None) -> None:
        """
        Initialize the engine.

        Args:
            settings: Estimator budgets
            workers: Process count for trials; None or 1 runs serially
        """
        self.settings = settings or BoundsSettings()
        self.workers = workers

    def trials(self, model: RandomModel, trials: int) -> list[TrialRecord]:
        """Bounds for trials 0..trials-1, ordered by trial index."""
        if trials < 1:
            raise InputError(f"Need at least one trial, got {trials}")
        settings = self.settings.model_dump()
        jobs = [(model.model_dump(), index, settings) for index in range(trials)]
        if self.workers and self.workers > 1 and trials > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                records = list(pool.map(_run_trial, jobs, chunksize=4))
        else:
            records = [_run_trial(job) for job in jobs]
        return sorted(records, key=lambda r: r.trial)

    def expected_norm(self, model: RandomModel, trials: int) -> MonteCarloEstimate:
        """
        Monte Carlo estimate of E[||G||].

        Each trial contributes its bounds midpoint; trials that did not
        converge contribute their upper bound and are counted.
        """
        records = self.trials(model, trials)
        values = [record.value for record in records]
        mean, std_error = _aggregate(values)
        non_converged = sum(not record.converged for record in records)
        if non_converged:
            logger.warning(f"{non_converged}/{trials} trials did not converge; using their upper bounds")
        logger.info(
            f"E||G({model.m},{model.n},{model.p})|| ~ {mean:.6f} +- {std_error:.6f} over {trials} trials"
        )
        return MonteCarloEstimate(
            mean=mean,
            std_error=std_error,
            trials=trials,
            non_converged=non_converged,
            per_trial_values=values,
            records=records,
        )

    def exhaustive_norm(self, model: RandomModel) -> MonteCarloEstimate:
        """
        Exact E[||G||] for small m x n, weighting every graph by p^e (1-p)^(mn-e).

        Exact classes use the closed-form eta value; graphs above eta_6 use
        the midpoint of their numeric bounds.
        """
        m, n = model.m, model.n
        if m * n > EXHAUSTIVE_LIMIT:
            raise InputError(f"Exhaustive mode supports m * n <= {EXHAUSTIVE_LIMIT}, got {m}x{n}")

        estimator = NormEstimator(self.settings)
        norms: dict[tuple[int, int, tuple[int, ...]], tuple[float, bool]] = {}
        size = m * n
        total = 0.0
        non_converged = 0
        for code in range(1 << size):
            bits = ((code >> np.arange(size)) & 1).reshape(m, n).astype(np.uint8)
            G = BiGraph(bits)
            key = canonical_key(G)
            if key not in norms:
                result = classify(G, estimator)
                if result.eta_value is not None:
                    norms[key] = (result.eta_value, True)
                else:
                    assert result.numeric is not None
                    norms[key] = (result.numeric.midpoint, result.numeric.converged)
            value, converged = norms[key]
            non_converged += not converged
            edges = int(bits.sum())
            total += value * model.p**edges * (1.0 - model.p) ** (size - edges)

        logger.info(f"Exhaustive E||G({m},{n},{model.p})|| = {total:.12f} over {len(norms)} classes")
        return MonteCarloEstimate(
            mean=total,
            std_error=0.0,
            trials=1 << size,
            mode=EstimationMode.EXHAUSTIVE,
            non_converged=non_converged,
        )


def expected_norm(
    model: RandomModel,
    trials: int,
    exhaustive: bool = False,
    settings: BoundsSettings | None = None,
    workers: int | None = None,
) -> MonteCarloEstimate:
    """E[||G||] by Monte Carlo, or exactly when ``exhaustive`` is set."""
    engine = RandomGraphEngine(settings, workers)
    if exhaustive:
        return engine.exhaustive_norm(model)
    return engine.expected_norm(model, trials)
