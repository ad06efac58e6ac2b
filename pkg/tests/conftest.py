"""
Pytest Configuration and Fixtures

Shared fixtures and configuration for the Schur idempotent norms test suite.
"""

import numpy as np
import pytest

from src.bounds.estimator import NormEstimator
from src.config import BoundsSettings
from src.graphs.catalog import GEE7, TRIE, cycle, sigma
from src.models.graph import BiGraph


@pytest.fixture(scope="session")
def bounds_settings() -> BoundsSettings:
    """Default estimator budgets."""
    return BoundsSettings()


@pytest.fixture(scope="session")
def estimator(bounds_settings: BoundsSettings) -> NormEstimator:
    """Estimator shared across tests."""
    return NormEstimator(bounds_settings)


@pytest.fixture
def trie() -> BiGraph:
    """The 3x3 staircase 111/110/100."""
    return TRIE


@pytest.fixture
def gee7() -> BiGraph:
    """The 3x3 graph 110/111/011."""
    return GEE7


@pytest.fixture
def lambda3() -> BiGraph:
    """Cycle on six vertices."""
    return cycle(3)


@pytest.fixture
def path4() -> BiGraph:
    """The path Sigma(4,4)."""
    return sigma(4, 4)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for property tests."""
    return np.random.default_rng(20240607)


@pytest.fixture
def small_random_graphs(rng: np.random.Generator) -> list[BiGraph]:
    """Twenty random 0-1 matrices of sizes up to 4x4."""
    graphs = []
    for _ in range(20):
        m, n = rng.integers(1, 5, size=2)
        graphs.append(BiGraph((rng.random((m, n)) < 0.5).astype(np.uint8)))
    return graphs
