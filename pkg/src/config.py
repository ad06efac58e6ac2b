"""
Solver Settings

Pydantic models for the tunables in config/solver.yaml and the loader
that reads them.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from src.exceptions import ConfigError

DEFAULT_CONFIG_PATH = Path("config/solver.yaml")


class BoundsSettings(BaseModel):
    """Budgets for two-sided norm estimation."""

    tol: float = Field(default=1e-6, gt=0.0, le=1e-2)
    restarts: int = Field(default=8, ge=1, le=64)
    max_iters: int = Field(default=500, ge=1, le=100000)
    ascent_tol: float = Field(default=1e-13, gt=0.0, le=1e-3)
    sweep_iters: int = Field(default=500, ge=1, le=100000)
    upper_sweeps: int = Field(default=12, ge=1, le=1000)
    slsqp_iters: int = Field(default=200, ge=1, le=100000)
    seed: int = 0


class CertificateSettings(BaseModel):
    """Tolerances for certificate verification."""

    tol: float = Field(default=1e-9, gt=0.0, le=1e-3)
    bracket_ones_max_n: int = Field(default=6, ge=1, le=64)


class RandomSettings(BaseModel):
    """Defaults for random-idempotent experiments."""

    trials: int = Field(default=200, ge=1)
    seed: int = 42
    workers: int | None = Field(default=None, ge=1)


class EnumerationSettings(BaseModel):
    """Defaults for exhaustive sweeps over small 0-1 matrices."""

    max_m: int = Field(default=4, ge=1, le=5)
    max_n: int = Field(default=4, ge=1, le=5)
    workers: int | None = Field(default=None, ge=1)
    cache_dir: str | None = None


class Settings(BaseModel):
    """All solver settings."""

    bounds: BoundsSettings = Field(default_factory=BoundsSettings)
    certificates: CertificateSettings = Field(default_factory=CertificateSettings)
    random: RandomSettings = Field(default_factory=RandomSettings)
    enumeration: EnumerationSettings = Field(default_factory=EnumerationSettings)


def _load_config(config_path: str | Path | None) -> dict[str, Any]:
    """Load the raw settings mapping from YAML."""
    path = DEFAULT_CONFIG_PATH if config_path is None else Path(config_path)

    if not path.exists():
        logger.warning(f"Solver config not found at {path}, using defaults")
        return {}

    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Cannot parse {path}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a mapping at top level")
    return data


def load_settings(config_path: str | Path | None = None) -> Settings:
    """
    Load solver settings.

    Args:
        config_path: YAML file; defaults to config/solver.yaml

    Returns:
        Validated Settings (defaults when the file is absent)
    """
    raw = _load_config(config_path)
    try:
        return Settings.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(f"Invalid solver settings: {e}") from e
