"""
Tests for Orthogonal Seeds and the Lower-Bound Ascent
"""

import numpy as np
import pytest

from src.bounds.ascent import lower_bound_ascend
from src.bounds.seeds import hadamard_seed, is_power_of_two, seed_orthogonal
from src.exact.constants import ETA
from src.exceptions import InputError
from src.graphs.catalog import E_GRAPHS, sigma
from src.linalg import hadamard, orthogonality_defect, pad_square, spectral_norm


class TestSeeds:
    """Tests for orthogonal starting points."""

    def test_power_of_two(self):
        """Test the power-of-two predicate."""
        assert [n for n in range(1, 17) if is_power_of_two(n)] == [1, 2, 4, 8, 16]

    @pytest.mark.parametrize("n", [1, 2, 4, 8])
    def test_hadamard_orthogonal(self, n):
        """Test the normalised Hadamard seed is orthogonal."""
        H = hadamard_seed(n)
        assert orthogonality_defect(H) < 1e-12
        assert np.allclose(np.abs(H), 1.0 / np.sqrt(n))

    def test_hadamard_needs_power_of_two(self):
        """Test other sizes are rejected."""
        with pytest.raises(InputError):
            hadamard_seed(3)

    @pytest.mark.parametrize("n", [3, 5, 6])
    def test_random_seed(self, n):
        """Test random seeds are orthogonal without small entries."""
        Q = seed_orthogonal(n, seed=7)
        assert orthogonality_defect(Q) < 1e-12
        assert np.min(np.abs(Q)) >= 1e-3

    def test_seed_deterministic(self):
        """Test the same seed gives the same matrix."""
        np.testing.assert_array_equal(seed_orthogonal(5, seed=3), seed_orthogonal(5, seed=3))

    def test_prefer_hadamard_off(self):
        """Test the random branch is used when Hadamard is declined."""
        Q = seed_orthogonal(4, seed=1, prefer_hadamard=False)
        assert not np.allclose(Q, hadamard_seed(4))


class TestAscent:
    """Tests for the alternating SVD / polar ascent."""

    def test_history_non_decreasing(self):
        """Test every iteration keeps or improves the objective."""
        A = sigma(4, 4).as_dense()
        result = lower_bound_ascend(A, U0=hadamard_seed(4))
        history = np.array(result.history)
        assert np.all(np.diff(history) >= -1e-12)

    def test_lower_is_recomputable(self):
        """Test the reported bound equals ||A o U|| for the returned U."""
        A = E_GRAPHS[5].as_dense()
        result = lower_bound_ascend(A, U0=seed_orthogonal(4, seed=0))
        assert orthogonality_defect(result.U) < 1e-10
        assert result.lower == pytest.approx(spectral_norm(hadamard(pad_square(A), result.U)))

    def test_witness_vector_lengths(self):
        """Test x lives on columns and y on rows."""
        A = np.ones((2, 3))
        result = lower_bound_ascend(A, U0=seed_orthogonal(3, seed=0))
        assert result.x.shape == (3,)
        assert result.y.shape == (2,)

    def test_zero_matrix(self):
        """Test the zero matrix has lower bound 0."""
        result = lower_bound_ascend(np.zeros((2, 2)))
        assert result.lower == 0.0
        assert result.iterations == 0

    def test_reaches_eta2(self):
        """Test the ascent attains sqrt(4/3) on E_2 from the Hadamard seed."""
        result = lower_bound_ascend(E_GRAPHS[2].as_dense(), U0=hadamard_seed(2))
        assert result.lower == pytest.approx(ETA[2], abs=1e-6)

    def test_bad_seed_shape(self):
        """Test a seed of the wrong size is rejected."""
        with pytest.raises(InputError):
            lower_bound_ascend(np.ones((3, 3)), U0=np.eye(2))
