"""
Gap Classifier

Maps a finite bipartite graph to its exact norm class eta_0..eta_6 by
matching the twin-free reduction of each component against the maximal
graphs F_1..F_6. Graphs that match nothing have norm at least eta_6 and
are given numeric bounds instead.
"""

from __future__ import annotations

from loguru import logger

from src.bounds.estimator import NormEstimator
from src.graphs.catalog import F_GRAPHS
from src.graphs.reduction import components, twin_reduce
from src.graphs.search import is_induced_subgraph
from src.models.classification import ClassResult, ComponentMatch, NormClass
from src.models.graph import BiGraph
from src.models.norms import NormBounds


def least_class(reduced: BiGraph) -> int | None:
    """Least j with the reduced component an induced subgraph of F_j (either orientation)."""
    for j in sorted(F_GRAPHS):
        F = F_GRAPHS[j]
        if reduced.edge_count > F.edge_count or max(reduced.shape) > max(F.shape):
            continue
        if is_induced_subgraph(reduced, F):
            return j
    return None


def match_components(G: BiGraph) -> list[ComponentMatch]:
    """Non-trivial components of G with their reductions and matched classes."""
    matches = []
    for component in components(G):
        if component.edge_count == 0:
            continue
        reduced = twin_reduce(component)
        matches.append(ComponentMatch(component, reduced, least_class(reduced)))
    return matches


def classify(G: BiGraph, estimator: NormEstimator | None = None) -> ClassResult:
    """
    Classify the Schur norm of G.

    Args:
        G: Any finite bipartite graph
        estimator: Used only for components outside every F_j

    Returns:
        ClassResult with label Eta(k) or AtLeastEta6
    """
    matches = match_components(G)
    if not matches:
        return ClassResult(NormClass.ETA_0, [])

    unmatched = [match for match in matches if match.matched_j is None]
    if not unmatched:
        k = max(match.matched_j for match in matches if match.matched_j is not None)
        logger.debug(f"classify {G.m}x{G.n}: Eta({k}) over {len(matches)} components")
        return ClassResult(NormClass.eta(k), matches)

    estimator = estimator or NormEstimator()
    best: NormBounds | None = None
    for match in unmatched:
        bounds = estimator.estimate(match.reduced.as_dense())
        if best is None or bounds.lower > best.lower:
            best = bounds
    logger.debug(f"classify {G.m}x{G.n}: AtLeastEta6, lower={best.lower if best else float('nan'):.8f}")
    return ClassResult(NormClass.AT_LEAST_ETA_6, matches, best)
