"""
Forbidden Structures

Diagnostic report of the small induced subgraphs that force a connected
twin-free graph above a norm class, and the path/cycle identification of
graphs of maximum degree two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from src.exact.constants import PATH_LIMIT
from src.exact.paths import cycle_norm, path_norm
from src.exceptions import InputError
from src.graphs.catalog import E_GRAPHS, GEE7, OBSTRUCTIONS, TRIE, cycle
from src.graphs.reduction import is_connected, is_twin_free, max_degree
from src.graphs.search import is_induced_subgraph
from src.models.graph import BiGraph, GraphFamily, GraphName

# Two rows sharing two columns, one row with a third column
TWIN_FAN = BiGraph.from_bits(2, 3, ["110", "111"])

DEGREE_THREE_TRIGGERS: dict[str, BiGraph] = {
    "E4": E_GRAPHS[4],
    "trie": TRIE,
    "gee7": GEE7,
}

HIGH_DEGREE_PATTERNS: dict[str, BiGraph] = {
    "twin-fan": TWIN_FAN,
    "obstruction:5.3": OBSTRUCTIONS[53],
}

CLASS_OBSTRUCTIONS: dict[str, BiGraph] = {
    "obstruction:5.4": OBSTRUCTIONS[54],
    "obstruction:5.5": OBSTRUCTIONS[55],
    "obstruction:5.6": OBSTRUCTIONS[56],
    "gee6-cycle": cycle(3),
}


@dataclass(frozen=True)
class DegreeTwoShape:
    """A connected twin-free graph of maximum degree two: a path or a cycle."""

    kind: str
    name: GraphName
    norm: float
    lower_class: GraphName | None = None
    upper_class: GraphName | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "name": self.name.label,
            "norm": self.norm,
            "E": self.lower_class.label if self.lower_class else None,
            "F": self.upper_class.label if self.upper_class else None,
        }


@dataclass
class StructureReport:
    """Which forbidden structures occur as induced subgraphs."""

    graph: BiGraph
    max_degree: int
    degree_three: dict[str, bool] = field(default_factory=dict)
    high_degree: dict[str, bool] = field(default_factory=dict)
    class_obstructions: dict[str, bool] = field(default_factory=dict)
    degree_two: DegreeTwoShape | None = None

    @property
    def found(self) -> list[str]:
        """Names of all structures present."""
        groups = (self.degree_three, self.high_degree, self.class_obstructions)
        return [name for group in groups for name, present in group.items() if present]

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph.to_json(),
            "max_degree": self.max_degree,
            "degree_three": self.degree_three,
            "high_degree": self.high_degree,
            "class_obstructions": self.class_obstructions,
            "found": self.found,
            "degree_two": self.degree_two.to_dict() if self.degree_two else None,
        }


def _sandwich(n: int) -> tuple[GraphName, GraphName]:
    """E = Sigma(n,n) and F = Sigma(n,n+1) (n even) or Lambda(n+1) (n odd)."""
    lower = GraphName(GraphFamily.SIGMA, (n, n))
    if n % 2 == 0:
        return lower, GraphName(GraphFamily.SIGMA, (n, n + 1))
    return lower, GraphName(GraphFamily.LAMBDA, (n + 1,))


def identify_degree_two(G: BiGraph) -> DegreeTwoShape | None:
    """
    Name a connected twin-free graph of maximum degree at most two.

    Paths are Sigma(n,n) or Sigma(n,n+1) up to orientation; cycles are
    Lambda(n). When the norm is below 4/pi the class sandwich E <= G <= F
    is attached.
    """
    if G.edge_count == 0 or max_degree(G) > 2 or not is_connected(G):
        return None
    m, n = G.shape
    small = min(m, n)

    if G.edge_count == m + n - 1:
        cols = max(m, n)
        name = GraphName(GraphFamily.SIGMA, (small, cols))
        norm = path_norm(small)
        E, F = _sandwich(small)
        return DegreeTwoShape("path", name, norm, E, F)

    name = GraphName(GraphFamily.LAMBDA, (m,))
    norm = cycle_norm(m)
    if m % 2 == 0 and norm < PATH_LIMIT:
        E, F = _sandwich(m - 1)
        return DegreeTwoShape("cycle", name, norm, E, F)
    return DegreeTwoShape("cycle", name, norm)


def forbidden_structure_report(G: BiGraph) -> StructureReport:
    """
    List the forbidden induced subgraphs present in G.

    Raises:
        InputError: G is not connected or not twin-free
    """
    if not is_connected(G):
        raise InputError(f"Structure report needs a connected graph, got {G!r}")
    if not is_twin_free(G):
        raise InputError(f"Structure report needs a twin-free graph, got {G!r}")

    report = StructureReport(graph=G, max_degree=max_degree(G))
    report.degree_three = {k: is_induced_subgraph(H, G) for k, H in DEGREE_THREE_TRIGGERS.items()}
    report.high_degree = {k: is_induced_subgraph(H, G) for k, H in HIGH_DEGREE_PATTERNS.items()}
    report.class_obstructions = {
        k: is_induced_subgraph(H, G) for k, H in CLASS_OBSTRUCTIONS.items()
    }
    report.degree_two = identify_degree_two(G)
    logger.debug(f"Structure report {G.m}x{G.n}: found {report.found or 'none'}")
    return report
