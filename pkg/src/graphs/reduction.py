"""
Graph Reduction

Degree, connected components, twin-free reduction and the norm-preserving
constructions (ampliation, direct sum, Kronecker product, deletion).
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from src.exceptions import InputError
from src.models.graph import BiGraph


def max_degree(G: BiGraph) -> int:
    """Largest vertex degree on either side; 0 for edgeless graphs."""
    if G.m == 0 or G.n == 0:
        return 0
    return int(max(G.row_degrees().max(), G.col_degrees().max()))


def components(G: BiGraph) -> list[BiGraph]:
    """
    Split a graph into its connected components.

    Rows and columns are vertices of one undirected graph on m + n nodes.
    Each component is returned as the induced submatrix on its rows and
    columns, so an isolated row is a 1x0 graph and an isolated column a
    0x1 graph. Components are ordered by their least vertex, rows first.
    """
    m, n = G.shape
    if m + n == 0:
        return []

    adjacency = np.zeros((m + n, m + n), dtype=np.uint8)
    adjacency[:m, m:] = G.bits
    adjacency[m:, :m] = G.bits.T
    count, labels = connected_components(csr_matrix(adjacency), directed=False)

    first_seen: dict[int, int] = {}
    for vertex, label in enumerate(labels):
        first_seen.setdefault(int(label), vertex)

    result = []
    for label in sorted(range(count), key=lambda c: first_seen[c]):
        members = np.flatnonzero(labels == label)
        rows = [int(v) for v in members if v < m]
        cols = [int(v) - m for v in members if v >= m]
        result.append(G.submatrix(rows, cols))
    return result


def _unique_rows(bits: np.ndarray) -> list[int]:
    """Indices of the first occurrence of each distinct row."""
    seen: set[bytes] = set()
    keep = []
    for i, row in enumerate(bits):
        key = row.tobytes()
        if key not in seen:
            seen.add(key)
            keep.append(i)
    return keep


def twin_reduce(G: BiGraph) -> BiGraph:
    """
    Collapse duplicate rows, then duplicate columns, until twin-free.

    The least index of each class of equal rows (columns) is kept.
    """
    bits = np.asarray(G.bits)
    while True:
        rows = _unique_rows(bits)
        reduced = bits[rows, :]
        cols = _unique_rows(reduced.T)
        reduced = reduced[:, cols]
        if reduced.shape == bits.shape:
            return BiGraph(reduced)
        bits = reduced


def is_twin_free(G: BiGraph) -> bool:
    return twin_reduce(G).shape == G.shape


def is_connected(G: BiGraph) -> bool:
    return len(components(G)) == 1


def delete(G: BiGraph, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> BiGraph:
    """Induced subgraph with the given rows and columns removed."""
    drop_rows, drop_cols = set(rows), set(cols)
    for i in drop_rows:
        if not 0 <= i < G.m:
            raise InputError(f"Row index {i} out of range for {G.m} rows")
    for j in drop_cols:
        if not 0 <= j < G.n:
            raise InputError(f"Column index {j} out of range for {G.n} columns")
    keep_rows = [i for i in range(G.m) if i not in drop_rows]
    keep_cols = [j for j in range(G.n) if j not in drop_cols]
    return G.submatrix(keep_rows, keep_cols)


def ampliate(G: BiGraph, r: int, s: int) -> BiGraph:
    """Repeat the biadjacency matrix in an r x s block grid (duplicates every vertex)."""
    if r < 1 or s < 1:
        raise InputError(f"Ampliation factors must be positive, got {r}, {s}")
    return BiGraph(np.tile(G.bits, (r, s)))


def direct_sum(*graphs: BiGraph) -> BiGraph:
    """Block-diagonal union of graphs."""
    m = sum(g.m for g in graphs)
    n = sum(g.n for g in graphs)
    bits = np.zeros((m, n), dtype=np.uint8)
    i = j = 0
    for g in graphs:
        bits[i : i + g.m, j : j + g.n] = g.bits
        i += g.m
        j += g.n
    return BiGraph(bits)


def kron(G: BiGraph, H: BiGraph) -> BiGraph:
    """Kronecker product; its Schur norm is the product of the two norms."""
    return BiGraph(np.kron(G.bits, H.bits))
