"""
Run Report

JSON envelope shared by every ``--json`` subcommand.
"""

from __future__ import annotations

import platform
from typing import Any

import numpy as np
import scipy
from pydantic import BaseModel, Field, field_validator

from simulation.models import GENERATOR
from src import __version__


def to_plain(value: Any) -> Any:
    """Replace numpy scalars and arrays by builtin Python values, recursively."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, (np.ndarray, np.generic)):
        return value.tolist()
    return value


def library_versions() -> dict[str, str]:
    """Versions that determine numerical results."""
    return {
        "schur-idempotents": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "python": platform.python_version(),
    }


class RunReport(BaseModel):
    """One CLI invocation: what was asked, what came back, and how to reproduce it."""

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: Any = None
    passed: bool = True
    versions: dict[str, str] = Field(default_factory=library_versions)
    seeds: dict[str, int] = Field(default_factory=dict)
    generator: str = GENERATOR
    wall_clock: float = 0.0

    @field_validator("inputs", "results", mode="before")
    @classmethod
    def _plain(cls, value: Any) -> Any:
        return to_plain(value)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
