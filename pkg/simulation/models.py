"""
Simulation Data Models

Pydantic and dataclass models for random bipartite graph experiments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

GENERATOR = "numpy.random.PCG64(SeedSequence([master_seed, trial_index]))"


class EstimationMode(str, Enum):
    """How the expectation is computed."""

    MONTE_CARLO = "monte_carlo"
    EXHAUSTIVE = "exhaustive"  # weight every graph by its probability


class RandomModel(BaseModel):
    """G(m, n, p): each of the mn edges present independently with probability p."""

    m: int = Field(ge=1, le=64)
    n: int = Field(ge=1, le=64)
    p: float = Field(gt=0.0, lt=1.0)
    master_seed: int = Field(default=42, ge=0, lt=2**64)

    def rng(self, trial_index: int) -> np.random.Generator:
        """Per-trial generator, independent of the order trials run in."""
        sequence = np.random.SeedSequence([self.master_seed, trial_index])
        return np.random.Generator(np.random.PCG64(sequence))


@dataclass
class TrialRecord:
    """Bounds for one sampled graph."""

    trial: int
    lower: float
    upper: float
    converged: bool
    edges: int = 0

    @property
    def value(self) -> float:
        """Midpoint when converged, else the upper bound."""
        return 0.5 * (self.lower + self.upper) if self.converged else self.upper

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "lower": self.lower,
            "upper": self.upper,
            "converged": self.converged,
        }


@dataclass
class MonteCarloEstimate:
    """Estimate of E[||G||] under a random model."""

    mean: float
    std_error: float
    trials: int
    mode: EstimationMode = EstimationMode.MONTE_CARLO
    non_converged: int = 0
    per_trial_values: list[float] | None = None
    records: list[TrialRecord] = field(default_factory=list, repr=False)
    generator: str = GENERATOR

    def within(self, value: float, sigmas: float = 3.0) -> bool:
        """True when value lies within the given number of standard errors."""
        return abs(self.mean - value) <= sigmas * self.std_error

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "mean": self.mean,
            "std_error": self.std_error,
            "trials": self.trials,
            "mode": self.mode.value,
            "non_converged": self.non_converged,
            "generator": self.generator,
        }
        if self.per_trial_values is not None:
            data["per_trial_values"] = self.per_trial_values
        return data
