"""
Graph Calculus Module

Operations on finite bipartite graphs used by the classifier.

Components:
    - catalog: named graphs (paths, cycles, E_j / F_j, obstructions)
    - reduction: degree, components, twin reduction, norm-preserving constructions
    - search: exact induced-subgraph and isomorphism tests, canonical keys
"""

from src.graphs.catalog import (
    E_GRAPHS,
    F_GRAPHS,
    OBSTRUCTIONS,
    bracket_ones,
    catalog,
    cycle,
    fixed_names,
    parse_graph_name,
    sigma,
    triangular,
)
from src.graphs.reduction import (
    ampliate,
    components,
    delete,
    direct_sum,
    is_connected,
    is_twin_free,
    kron,
    max_degree,
    twin_reduce,
)
from src.graphs.search import canonical_key, is_induced_subgraph, is_isomorphic

__all__ = [
    # Catalog
    "E_GRAPHS",
    "F_GRAPHS",
    "OBSTRUCTIONS",
    "bracket_ones",
    "catalog",
    "cycle",
    "fixed_names",
    "parse_graph_name",
    "sigma",
    "triangular",
    # Reduction
    "ampliate",
    "components",
    "delete",
    "direct_sum",
    "is_connected",
    "is_twin_free",
    "kron",
    "max_degree",
    "twin_reduce",
    # Search
    "canonical_key",
    "is_induced_subgraph",
    "is_isomorphic",
]
