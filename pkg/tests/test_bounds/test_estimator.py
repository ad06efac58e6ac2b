"""
Tests for Two-Sided Norm Estimation
"""

import numpy as np
import pytest

from src.bounds.estimator import NormEstimator, norm_bounds
from src.bounds.factorize import (
    alternating_sweep,
    compress_factorization,
    factorization_from_witness,
    upper_bound_factorize,
)
from src.config import BoundsSettings
from src.exceptions import InputError
from src.exact.constants import (
    ETA,
    GEE6_CYCLE_NORM,
    GEE7_NORM,
    OBSTRUCTION_NORMS,
    TRIE_NORM,
)
from src.exact.paths import cycle_norm, path_norm
from src.graphs.catalog import E_GRAPHS, GEE7, OBSTRUCTIONS, TRIE, cycle, sigma, triangular
from src.graphs.reduction import ampliate, direct_sum, kron
from src.models.graph import BiGraph
from src.models.norms import Factorization

EXACT_CASES = [
    ("single-edge", E_GRAPHS[1], ETA[1]),
    ("E2", E_GRAPHS[2], ETA[2]),
    ("E3", E_GRAPHS[3], ETA[3]),
    ("E4", E_GRAPHS[4], ETA[4]),
    ("E5", E_GRAPHS[5], ETA[5]),
    ("E6", E_GRAPHS[6], ETA[6]),
    ("trie", TRIE, TRIE_NORM),
    ("gee7", GEE7, GEE7_NORM),
    ("gee6-cycle", cycle(3), GEE6_CYCLE_NORM),
]


class TestExactValues:
    """Tests that the estimator converges to every closed form."""

    @pytest.mark.parametrize("label, G, value", EXACT_CASES, ids=[c[0] for c in EXACT_CASES])
    def test_closed_forms(self, estimator, label, G, value):
        """Test the interval is tight and contains the exact norm."""
        bounds = estimator.estimate(G.as_dense())

        assert bounds.converged
        assert bounds.width <= 1e-6
        assert bounds.lower <= value + 1e-9
        assert bounds.upper >= value - 1e-9
        assert bounds.midpoint == pytest.approx(value, abs=1e-5)

    @pytest.mark.parametrize("number", [54, 55, 56, 53])
    def test_obstruction_values(self, estimator, number):
        """Test the obstruction norms to five decimals."""
        bounds = estimator.estimate(OBSTRUCTIONS[number].as_dense())
        assert bounds.converged
        assert abs(bounds.midpoint - OBSTRUCTION_NORMS[number]) <= 5e-6
        assert bounds.restarts_used <= 8


class TestPathTheorem:
    """Tests for paths and cycles against their closed forms."""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_paths_bracket(self, estimator, n):
        """Test Sigma(n,n) and Sigma(n,n+1) bracket the path norm."""
        value = path_norm(n)
        for cols in (n, n + 1):
            bounds = estimator.estimate(sigma(n, cols).as_dense())
            assert bounds.lower - 1e-5 <= value <= bounds.upper + 1e-5

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
    def test_cycles_bracket(self, estimator, n):
        """Test Lambda(n) brackets the cycle norm."""
        bounds = estimator.estimate(cycle(n).as_dense())
        assert bounds.lower - 1e-5 <= cycle_norm(n) <= bounds.upper + 1e-5


class TestNormLaws:
    """Tests for invariance under transpose, permutation, duplication and deletion."""

    def test_transpose(self, estimator, small_random_graphs):
        """Test ||A^T|| = ||A||."""
        for G in small_random_graphs[:8]:
            a = estimator.estimate(G.as_dense())
            b = estimator.estimate(G.T.as_dense())
            assert a.lower <= b.upper + 1e-9
            assert b.lower <= a.upper + 1e-9

    def test_permutation(self, estimator, rng, small_random_graphs):
        """Test permuting rows and columns leaves the norm unchanged."""
        for G in small_random_graphs[:8]:
            P = G.as_dense()[rng.permutation(G.m)][:, rng.permutation(G.n)]
            a = estimator.estimate(G.as_dense())
            b = estimator.estimate(P)
            assert a.lower <= b.upper + 1e-9
            assert b.lower <= a.upper + 1e-9

    def test_duplication(self, estimator):
        """Test [[A, A], [A, A]] has the norm of A."""
        a = estimator.estimate(GEE7.as_dense())
        b = estimator.estimate(ampliate(GEE7, 2, 2).as_dense())
        assert b.midpoint == pytest.approx(a.midpoint, abs=1e-5)

    def test_deletion(self, estimator, small_random_graphs):
        """Test deleting a row does not increase the norm."""
        for G in small_random_graphs[:8]:
            if G.m < 2:
                continue
            full = estimator.estimate(G.as_dense())
            smaller = estimator.estimate(G.as_dense()[1:])
            assert smaller.lower <= full.upper + 1e-6

    def test_direct_sum_is_max(self, estimator):
        """Test the norm of a direct sum is the larger norm."""
        bounds = estimator.estimate(direct_sum(E_GRAPHS[2], TRIE).as_dense())
        assert bounds.midpoint == pytest.approx(TRIE_NORM, abs=1e-5)

    def test_kron_multiplies(self, estimator):
        """Test ||A (x) B|| = ||A|| ||B|| on two small paths."""
        bounds = estimator.estimate(kron(E_GRAPHS[2], E_GRAPHS[2]).as_dense())
        assert bounds.lower - 1e-5 <= ETA[2] ** 2 <= bounds.upper + 1e-5

    @pytest.mark.slow
    def test_triangular_growth(self, estimator):
        """Test the lower bound of the triangular matrix grows with n."""
        lowers = [estimator.estimate(triangular(n).as_dense()).lower for n in (2, 4, 8, 16)]
        assert all(b > a for a, b in zip(lowers, lowers[1:]))


class TestEstimatorContract:
    """Tests for the estimator's edge cases and reproducibility."""

    def test_zero_matrix(self, estimator):
        """Test the zero matrix is exactly 0."""
        bounds = estimator.estimate(np.zeros((3, 2)))
        assert bounds.lower == 0.0
        assert bounds.upper == 0.0
        assert bounds.converged

    def test_empty_matrix(self, estimator):
        """Test the 0x0 matrix is exactly 0."""
        bounds = estimator.estimate(np.zeros((0, 0)))
        assert bounds.upper == 0.0

    def test_rank_one_has_norm_one(self, estimator):
        """Test an all-ones block has norm 1."""
        bounds = estimator.estimate(np.ones((3, 5)))
        assert bounds.midpoint == pytest.approx(1.0, abs=1e-6)

    def test_witnesses_recompute(self, estimator):
        """Test both bounds are re-derivable from the stored witnesses."""
        A = TRIE.as_dense()
        bounds = estimator.estimate(A)
        lower, upper = bounds.recompute(A)
        assert lower == pytest.approx(bounds.lower, abs=1e-12)
        assert upper == pytest.approx(bounds.upper, abs=1e-12)
        assert bounds.factorization.residual() < 1e-9

    def test_reproducible(self):
        """Test identical settings give bit-identical bounds."""
        A = cycle(5).as_dense()
        a = norm_bounds(A)
        b = norm_bounds(A)
        assert a.lower == b.lower
        assert a.upper == b.upper

    def test_overrides(self):
        """Test explicit arguments override settings."""
        bounds = norm_bounds(TRIE.as_dense(), tol=1e-4, restarts=2, settings=BoundsSettings(tol=1e-8))
        assert bounds.tol == 1e-4
        assert bounds.restarts_used <= 2

    def test_lower_never_exceeds_upper(self, small_random_graphs):
        """Test soundness on random matrices with a small budget."""
        estimator = NormEstimator(BoundsSettings(restarts=2, max_iters=50))
        for G in small_random_graphs:
            bounds = estimator.estimate(G.as_dense())
            assert bounds.lower <= bounds.upper + 1e-9


class TestFactorizationUtilities:
    """Tests for factorization construction helpers."""

    def test_upper_bound_history_non_increasing(self):
        """Test accepted products never increase."""
        result = upper_bound_factorize(TRIE.as_dense())
        history = np.array(result.history)
        assert np.all(np.diff(history) <= 1e-12)
        assert result.factorization.residual() < 1e-9

    def test_alternating_sweep_product_non_increasing(self):
        """Test the sweep product c(S)c(R) never increases from a skewed start."""
        A = TRIE.as_dense()
        G = np.random.default_rng(3).normal(size=(3, 3)) + 3.0 * np.eye(3)
        S0, R0 = G, np.linalg.solve(G.T, A)
        start = Factorization(S0, R0, A).product
        result = alternating_sweep(S0, R0, A, max_iters=50, tol=0.0)
        history = np.array(result.history)
        assert history[0] == pytest.approx(start)
        assert np.all(np.diff(history) <= 0.0)
        assert result.upper <= start + 1e-12
        assert result.upper >= TRIE_NORM - 1e-9
        assert result.factorization.residual() < 1e-9

    def test_alternating_sweep_padded_identity_start(self):
        """Test the sweep accepts S = I padded with zero rows and R = A."""
        A = GEE7.as_dense()
        m, n = A.shape
        S0 = np.vstack([np.eye(m), np.zeros((2, m))])
        R0 = np.vstack([A, np.zeros((2, n))])
        result = alternating_sweep(S0, R0, A)
        assert np.all(np.diff(result.history) <= 0.0)
        assert result.factorization.residual() < 1e-9
        assert result.upper >= GEE7_NORM - 1e-9

    def test_alternating_sweep_rejects_bad_start(self):
        """Test factors that do not reproduce A are rejected."""
        A = TRIE.as_dense()
        with pytest.raises(InputError):
            alternating_sweep(np.eye(3), np.zeros((3, 3)), A)

    def test_sweep_only_path(self):
        """Test the unrefined search is the sweep from S = I, R = A."""
        A = GEE7.as_dense()
        result = upper_bound_factorize(A, refine=False)
        assert np.all(np.diff(result.history) <= 0.0)
        assert result.factorization.residual() < 1e-9
        assert result.upper >= GEE7_NORM - 1e-9
        assert result.upper <= Factorization(np.eye(A.shape[0]), A, A).product + 1e-12

    def test_refinement_does_not_lose_ground(self):
        """Test refinement ends at or below the sweep-only product."""
        A = TRIE.as_dense()
        plain = upper_bound_factorize(A, refine=False)
        refined = upper_bound_factorize(A)
        assert refined.upper <= plain.upper + 1e-12
        assert np.all(np.diff(refined.history) <= 1e-12)

    def test_upper_bound_unpacks(self):
        """Test the result unpacks into (factorization, upper)."""
        F, upper = upper_bound_factorize(E_GRAPHS[2].as_dense())
        assert upper == pytest.approx(F.product)
        assert upper >= ETA[2] - 1e-9

    def test_compress(self):
        """Test compression keeps S^T R and does not increase the product."""
        A = np.array([[1.0, 1.0], [0.0, 1.0]])
        S = np.vstack([np.eye(2), np.zeros((2, 2))])
        R = np.vstack([A, np.zeros((2, 2))])
        F = Factorization(S, R, A)
        compressed = compress_factorization(F)
        assert compressed.k <= 2
        assert compressed.residual() < 1e-12
        assert compressed.product <= F.product + 1e-12

    def test_from_witness_rank_one(self):
        """Test uniform weights on an all-ones block give the product one."""
        A = np.ones((2, 2))
        x = y = np.full(2, 1.0 / np.sqrt(2.0))
        F = factorization_from_witness(A, x, y)
        assert F is not None
        assert F.residual() < 1e-9
        assert F.product == pytest.approx(1.0)

    def test_from_witness_zero(self):
        """Test the zero matrix has no witness factorization."""
        assert factorization_from_witness(np.zeros((2, 2)), np.ones(2), np.ones(2)) is None

    def test_single_edge_factorization(self):
        """Test the 1x1 case has product one."""
        result = upper_bound_factorize(BiGraph.from_bits(1, 1, ["1"]).as_dense())
        assert result.upper == pytest.approx(1.0)

    def test_kron_certificate_composes(self):
        """Test Kronecker products of factorizations multiply their bounds."""
        A = E_GRAPHS[2].as_dense()
        F = upper_bound_factorize(A).factorization
        K = Factorization(np.kron(F.S, F.S), np.kron(F.R, F.R), np.kron(A, A))
        assert K.residual() < 1e-9
        assert K.product == pytest.approx(F.product**2)
        assert K.product >= ETA[2] ** 2 - 1e-9
