"""
Tests for Path and Cycle Norms and the Path Witness
"""

import math

import numpy as np
import pytest

from src.exact.constants import ETA, PATH_LIMIT
from src.exact.paths import (
    build_path_witness,
    cycle_norm,
    extended_path_matrix,
    generating_vector,
    path_norm,
    path_weights,
    p_projection,
    popa_bounds,
    q_projection,
    rotation_block,
    scaling_diagonal,
)
from src.exact.trig import PathTrig, TrigForm, verify_altzero, verify_bigstar
from src.exceptions import InputError
from src.graphs.catalog import cycle, sigma


class TestPathNorm:
    """Tests for the closed-form path and cycle norms."""

    def test_known_values(self):
        """Test small paths hit the eta constants."""
        assert path_norm(1) == pytest.approx(1.0)
        assert path_norm(2) == pytest.approx(ETA[2], abs=1e-12)
        assert path_norm(3) == pytest.approx(ETA[3], abs=1e-12)
        assert path_norm(4) == pytest.approx(ETA[6], abs=1e-12)
        assert round(path_norm(2), 6) == 1.154701
        assert round(path_norm(4), 6) == 1.231073

    def test_increasing_to_limit(self):
        """Test strict increase on n <= 200 with limit 4/pi."""
        values = [path_norm(n) for n in range(1, 201)]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert PATH_LIMIT - 1e-3 < values[-1] < PATH_LIMIT

    def test_popa_lower_bound(self):
        """Test the older lower estimate never exceeds the exact value."""
        for n in range(1, 201):
            lower, upper = popa_bounds(n)
            assert lower <= path_norm(n) + 1e-12
            assert upper == path_norm(n)

    def test_cycle_norms(self):
        """Test the even and odd cycle formulas."""
        assert cycle_norm(4) == pytest.approx(0.5 / math.tan(math.pi / 8))
        assert cycle_norm(3) == pytest.approx(4.0 / 3.0)
        assert cycle_norm(2) == pytest.approx(1.0)

    def test_odd_path_equals_even_cycle(self):
        """Test Lambda(n+1) has the path norm for odd n."""
        for n in (1, 3, 5, 7):
            assert cycle_norm(n + 1) == pytest.approx(path_norm(n))

    def test_invalid_sizes(self):
        """Test out-of-range parameters."""
        with pytest.raises(InputError):
            path_norm(0)
        with pytest.raises(InputError):
            cycle_norm(1)


class TestBuildingBlocks:
    """Tests for the pieces of the path construction."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_rotation_block_orthogonal(self, n):
        """Test W is orthogonal."""
        W = rotation_block(n)
        np.testing.assert_allclose(W @ W.T, np.eye(n), atol=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_generating_vector_norm(self, n):
        """Test ||r||^2 equals the path norm."""
        r = generating_vector(n)
        assert float(r @ r) == pytest.approx(path_norm(n))

    def test_q_projection_rank_one(self):
        """Test Q_j is a rank-one projection scaled by ||v||^2."""
        Q = q_projection(4, 2)
        assert np.linalg.matrix_rank(Q) == 1

    @pytest.mark.parametrize("n", range(1, 9))
    def test_scaling_conjugates_q_to_p(self, n):
        """Test D Q_j D = P_j for every j up to 2n+1."""
        D = scaling_diagonal(n)
        for j in range(2 * n + 2):
            np.testing.assert_allclose(D @ q_projection(n, j) @ D, p_projection(n, j), atol=1e-10)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_alternating_q_sums_vanish(self, n):
        """Test sum (-1)^j Q_j and sum (-1)^j kappa(a+2j) Q_j vanish over j = 0..2n+1."""
        trig = PathTrig(n)
        Q = [q_projection(n, j) for j in range(2 * n + 2)]
        plain = sum((-1) ** j * Qj for j, Qj in enumerate(Q))
        np.testing.assert_allclose(plain, 0.0, atol=1e-9)
        for a in (0, 1, 2):
            weighted = sum((-1) ** j * trig.kappa(a + 2 * j) * Qj for j, Qj in enumerate(Q))
            np.testing.assert_allclose(weighted, 0.0, atol=1e-9)

    def test_weights_are_convex(self):
        """Test both weight vectors sum to one."""
        a, b = path_weights(5)
        assert a.sum() == pytest.approx(1.0)
        assert b.sum() == pytest.approx(1.0)
        assert np.all(a > 0)

    def test_extended_matrix_odd_is_cycle(self):
        """Test the extended matrix is the 0-1 cycle for odd n."""
        np.testing.assert_array_equal(extended_path_matrix(3), cycle(4).as_dense())

    def test_extended_matrix_even_sign(self):
        """Test the corner entry is -1 for even n."""
        assert extended_path_matrix(2)[2, 0] == -1.0


class TestPathWitness:
    """Tests for the extremal factorization and witness."""

    @pytest.mark.parametrize("n", range(1, 13))
    def test_all_invariants(self, n):
        """Test orthogonality, factorization, weights and attainment."""
        witness = build_path_witness(n)
        for name, defect in witness.defects().items():
            assert defect <= 1e-9, f"{name} = {defect:.3e} for n={n}"

    def test_b_is_the_path(self):
        """Test B is the path Sigma(n,n)."""
        witness = build_path_witness(4)
        np.testing.assert_array_equal(witness.B, sigma(4, 4).as_dense())

    def test_attained_value(self):
        """Test the witness attains path_norm(n)."""
        witness = build_path_witness(6)
        assert witness.attained == pytest.approx(path_norm(6), abs=1e-9)

    def test_to_dict_lists(self):
        """Test the JSON form carries every matrix."""
        data = build_path_witness(2).to_dict()
        assert data["n"] == 2
        assert len(data["U"]) == 2
        assert {"W", "R", "S", "x", "y"} <= set(data)

    def test_invalid_n(self):
        """Test n < 1 is rejected."""
        with pytest.raises(InputError):
            build_path_witness(0)


class TestTrigIdentities:
    """Tests for the summation identity and the alternating sums."""

    def test_theta(self):
        """Test theta = pi / 2(n+1)."""
        assert PathTrig(3).theta == pytest.approx(math.pi / 8)

    def test_t_weights(self):
        """Test t_j is positive below n and vanishes at n."""
        trig = PathTrig(4)
        assert all(trig.t(j) > 0 for j in range(4))
        assert trig.t(4) == pytest.approx(0.0, abs=1e-12)

    def test_bigstar_random_tuples(self, rng):
        """Test the summation identity on random admissible parameters."""
        forms = list(TrigForm)
        for _ in range(100):
            n = int(rng.integers(1, 11))
            d = int(rng.integers(1, 2 * (n + 1)))
            a = int(rng.integers(-10, 11))
            N = int(rng.integers(0, 8))
            f = forms[int(rng.integers(0, 4))]
            assert verify_bigstar(N, f, a, d, n)

    def test_bigstar_degenerate(self):
        """Test lambda(d) = 0 is rejected."""
        with pytest.raises(InputError):
            verify_bigstar(2, "kappa", 0, 8, 3)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_altzero_part1(self, n):
        """Test alternating sums with even step vanish."""
        for m in range(-2 * n, 2 * n + 1, 2):
            for f in TrigForm:
                assert verify_altzero(n, "part1", a=1, m=m, f=f)

    def test_altzero_part2(self):
        """Test the triple-product alternating sums vanish."""
        n = 4
        for s in range(-(n - 1), n):
            for t in range(-(n - 1), n):
                if (s - t) % 2 == 0:
                    assert verify_altzero(n, "part2", a=1, s=s, t=t, f="lambda", g="kappa", h="lambda")

    def test_altzero_range_checked(self):
        """Test parameters outside the lemma are rejected."""
        with pytest.raises(InputError):
            verify_altzero(3, "part1", m=3)
        with pytest.raises(InputError):
            verify_altzero(3, "part2", s=1, t=2)
