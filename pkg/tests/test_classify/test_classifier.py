"""
Tests for the Norm Classifier and Forbidden Structures
"""

import numpy as np
import pytest

from src.classify import (
    classify,
    forbidden_structure_report,
    identify_degree_two,
    least_class,
    match_components,
)
from src.bounds.estimator import NormEstimator
from src.classify.enumeration import all_matrices
from src.config import BoundsSettings
from src.exact.constants import ETA, GEE6_CYCLE_NORM
from src.exact.paths import cycle_norm, path_norm
from src.exceptions import InputError
from src.graphs.catalog import E_GRAPHS, F_GRAPHS, GEE7, OBSTRUCTIONS, TRIE, cycle, sigma
from src.graphs.reduction import ampliate, direct_sum, twin_reduce
from src.models.classification import NormClass
from src.models.graph import BiGraph, GraphFamily, GraphName


class TestClassify:
    """Tests for the gap-theorem classifier."""

    @pytest.mark.parametrize("j", range(1, 7))
    def test_e_graphs(self, j):
        """Test E_j is labelled Eta(j)."""
        result = classify(E_GRAPHS[j])
        assert result.label == NormClass.eta(j)
        assert result.eta_value == ETA[j]
        assert result.numeric is None

    @pytest.mark.parametrize("j", range(1, 7))
    def test_f_graphs(self, j):
        """Test F_j is labelled Eta(j)."""
        assert classify(F_GRAPHS[j]).label == NormClass.eta(j)

    def test_empty_graph(self):
        """Test a graph without edges is Eta(0)."""
        result = classify(BiGraph.empty(3, 2))
        assert result.label == NormClass.ETA_0
        assert result.per_component == []
        assert result.eta_value == 0.0

    def test_all_ones(self):
        """Test a full block reduces to a single edge."""
        assert classify(BiGraph(np.ones((3, 4), dtype=np.uint8))).label == NormClass.ETA_1

    def test_transpose_same_class(self):
        """Test E_4 transposed stays in Eta(4)."""
        assert classify(E_GRAPHS[4].T).label == NormClass.ETA_4

    def test_duplication_same_class(self):
        """Test duplicating rows and columns does not change the class."""
        assert classify(ampliate(E_GRAPHS[3], 2, 3)).label == NormClass.ETA_3

    @pytest.mark.parametrize(
        "m, n",
        [(m, n) for m in range(1, 4) for n in range(1, 5) if m * n < 12]
        + [pytest.param(3, 4, marks=pytest.mark.slow)],
    )
    def test_label_invariant_exhaustive(self, m, n):
        """Test transpose, permutation and twin duplication keep the label of every m x n graph."""
        # labels do not depend on the numeric bounds
        quick = NormEstimator(
            BoundsSettings(restarts=1, max_iters=5, sweep_iters=1, upper_sweeps=1, slsqp_iters=1)
        )
        rng = np.random.default_rng(m * 10 + n)
        for bits in all_matrices(m, n):
            label = classify(BiGraph(bits), quick).label
            rows, cols = rng.permutation(m), rng.permutation(n)
            variants = [
                bits.T,
                bits[np.ix_(rows, cols)],
                np.vstack([bits, bits[-1:]]),
                np.hstack([bits, bits[:, -1:]]),
            ]
            for variant in variants:
                assert classify(BiGraph(variant), quick).label == label

    def test_direct_sum_takes_max(self):
        """Test the label of a disjoint union is the larger label."""
        result = classify(direct_sum(E_GRAPHS[2], E_GRAPHS[4], E_GRAPHS[1]))
        assert result.label == NormClass.ETA_4
        assert sorted(match.matched_j for match in result.per_component) == [1, 2, 4]

    @pytest.mark.parametrize("G", [TRIE, GEE7, cycle(3)], ids=["trie", "gee7", "gee6-cycle"])
    def test_tail(self, estimator, G):
        """Test graphs outside every F_j land in the tail with a certified lower bound."""
        result = classify(G, estimator)
        assert result.label == NormClass.AT_LEAST_ETA_6
        assert result.eta_value is None
        assert result.numeric is not None
        assert result.numeric.lower >= ETA[6] - 1e-5

    def test_tail_component_drives_label(self, estimator):
        """Test one tail component is enough for AtLeastEta6."""
        result = classify(direct_sum(E_GRAPHS[2], TRIE), estimator)
        assert result.label == NormClass.AT_LEAST_ETA_6
        assert [match.matched_j for match in result.per_component].count(None) == 1

    def test_result_dict(self):
        """Test the serialised result carries the label and value."""
        data = classify(E_GRAPHS[5]).to_dict()
        assert data["label"] == "Eta(5)"
        assert data["eta_value"] == pytest.approx(ETA[5])


class TestMatching:
    """Tests for component matching against F_j."""

    def test_least_class_of_longest_path(self):
        """Test Sigma(4,5) first fits in F_6."""
        assert least_class(twin_reduce(sigma(4, 5))) == 6

    def test_least_class_none(self):
        """Test the trie fits in no F_j."""
        assert least_class(TRIE) is None

    def test_components_skip_isolated_vertices(self):
        """Test rows and columns without edges are not components."""
        G = BiGraph.from_bits(3, 3, ["110", "000", "000"])
        matches = match_components(G)
        assert len(matches) == 1
        assert matches[0].reduced.shape == (1, 1)


class TestDegreeTwo:
    """Tests for naming paths and cycles."""

    def test_even_path(self):
        """Test Sigma(4,5) is sandwiched by Sigma(4,4) and Sigma(4,5)."""
        shape = identify_degree_two(sigma(4, 5))
        assert shape is not None
        assert shape.kind == "path"
        assert shape.norm == pytest.approx(path_norm(4))
        assert shape.lower_class == GraphName(GraphFamily.SIGMA, (4, 4))
        assert shape.upper_class == GraphName(GraphFamily.SIGMA, (4, 5))

    def test_odd_path(self):
        """Test Sigma(3,4) is sandwiched by Sigma(3,3) and Lambda(4)."""
        shape = identify_degree_two(sigma(3, 4))
        assert shape is not None
        assert shape.name == GraphName(GraphFamily.SIGMA, (3, 4))
        assert shape.upper_class == GraphName(GraphFamily.LAMBDA, (4,))

    def test_transposed_path(self):
        """Test orientation does not matter."""
        shape = identify_degree_two(sigma(3, 4).T)
        assert shape is not None
        assert shape.name == GraphName(GraphFamily.SIGMA, (3, 4))

    def test_even_cycle_below_limit(self):
        """Test Lambda(4) gets a sandwich."""
        shape = identify_degree_two(cycle(4))
        assert shape is not None
        assert shape.kind == "cycle"
        assert shape.norm == pytest.approx(cycle_norm(4))
        assert shape.lower_class == GraphName(GraphFamily.SIGMA, (3, 3))

    def test_odd_cycle(self):
        """Test Lambda(3) has norm 4/3 and no sandwich."""
        shape = identify_degree_two(cycle(3))
        assert shape is not None
        assert shape.norm == pytest.approx(GEE6_CYCLE_NORM)
        assert shape.lower_class is None

    def test_degree_three_rejected(self):
        """Test graphs with a degree-three vertex are not named."""
        assert identify_degree_two(TRIE) is None

    def test_disconnected_rejected(self):
        """Test a disjoint union is not named."""
        assert identify_degree_two(direct_sum(sigma(2, 2), sigma(2, 2))) is None


class TestForbiddenStructures:
    """Tests for the forbidden induced subgraph report."""

    def test_trie_found(self):
        """Test the trie reports itself."""
        report = forbidden_structure_report(TRIE)
        assert report.degree_three["trie"]
        assert "trie" in report.found
        assert report.max_degree == 3

    @pytest.mark.parametrize(
        "number, name",
        [(54, "obstruction:5.4"), (55, "obstruction:5.5"), (56, "obstruction:5.6")],
    )
    def test_class_obstructions_found(self, number, name):
        """Test each obstruction is found in itself."""
        report = forbidden_structure_report(OBSTRUCTIONS[number])
        assert report.class_obstructions[name]

    def test_high_degree_pattern(self):
        """Test the 4x4 star obstruction is reported."""
        report = forbidden_structure_report(OBSTRUCTIONS[53])
        assert report.high_degree["obstruction:5.3"]

    def test_path_is_clean(self):
        """Test a path contains none of the listed structures."""
        report = forbidden_structure_report(sigma(4, 4))
        assert report.found == []
        assert report.degree_two is not None
        assert report.to_dict()["degree_two"]["kind"] == "path"

    def test_disconnected_rejected(self):
        """Test a disconnected graph raises InputError."""
        with pytest.raises(InputError):
            forbidden_structure_report(direct_sum(E_GRAPHS[2], E_GRAPHS[2]))

    def test_twins_rejected(self):
        """Test a graph with twin rows raises InputError."""
        with pytest.raises(InputError):
            forbidden_structure_report(BiGraph(np.ones((2, 2), dtype=np.uint8)))
