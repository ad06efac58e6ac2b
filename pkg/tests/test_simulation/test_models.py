"""
Tests for Simulation Data Models
"""

import numpy as np
import pytest
from pydantic import ValidationError

from simulation.models import (
    GENERATOR,
    EstimationMode,
    MonteCarloEstimate,
    RandomModel,
    TrialRecord,
)


class TestRandomModel:
    """Tests for the G(m, n, p) model."""

    def test_defaults(self):
        """Test the default master seed."""
        model = RandomModel(m=3, n=4, p=0.5)
        assert model.master_seed == 42

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5])
    def test_invalid_probability(self, p):
        """Test p must lie strictly between 0 and 1."""
        with pytest.raises(ValidationError):
            RandomModel(m=2, n=2, p=p)

    def test_invalid_size(self):
        """Test sizes must be positive."""
        with pytest.raises(ValidationError):
            RandomModel(m=0, n=2, p=0.5)

    def test_rng_per_trial(self):
        """Test trial generators depend only on (master_seed, trial_index)."""
        model = RandomModel(m=2, n=2, p=0.5, master_seed=7)
        a = model.rng(3).random(5)
        b = model.rng(3).random(5)
        c = model.rng(4).random(5)
        np.testing.assert_array_equal(a, b)
        assert not np.array_equal(a, c)


class TestRecords:
    """Tests for trial records and estimates."""

    def test_trial_value_converged(self):
        """Test a converged trial contributes its midpoint."""
        assert TrialRecord(0, 1.0, 1.2, True).value == pytest.approx(1.1)

    def test_trial_value_unconverged(self):
        """Test an unconverged trial contributes its upper bound."""
        assert TrialRecord(0, 1.0, 1.2, False).value == 1.2

    def test_within(self):
        """Test the standard-error window."""
        estimate = MonteCarloEstimate(mean=1.0, std_error=0.1, trials=10)
        assert estimate.within(1.25)
        assert not estimate.within(1.35)

    def test_to_dict(self):
        """Test the serialised estimate names its generator and mode."""
        estimate = MonteCarloEstimate(mean=1.0, std_error=0.0, trials=16, mode=EstimationMode.EXHAUSTIVE)
        data = estimate.to_dict()
        assert data["mode"] == "exhaustive"
        assert data["generator"] == GENERATOR
        assert "per_trial_values" not in data
