"""
Induced Subgraph Search

Exact containment and isomorphism tests for small bipartite graphs, plus a
canonical key used to deduplicate enumerations up to isomorphism.

The search assigns rows of the pattern graph to rows of the host by
backtracking (pattern rows in decreasing degree order). Once all rows are
placed, columns only have to be matched by their restricted 0-1 pattern, so
the column step reduces to comparing pattern multiplicities.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations

import numpy as np

from src.models.graph import BiGraph


def _columns_fit(H_cols: Counter[bytes], G_block: np.ndarray) -> bool:
    """Every column pattern of H occurs at least as often among G's restricted columns."""
    available = Counter(col.tobytes() for col in G_block.T)
    return all(available[pattern] >= count for pattern, count in H_cols.items())


def _embeds(H: np.ndarray, G: np.ndarray) -> bool:
    """Row-and-column injection of H into G preserving every bit (no transpose)."""
    hm, hn = H.shape
    gm, gn = G.shape
    if hm > gm or hn > gn:
        return False
    if hm == 0:
        return True

    order = sorted(range(hm), key=lambda i: (-int(H[i].sum()), i))
    h_deg = H.sum(axis=1)
    g_deg = G.sum(axis=1)
    assigned: list[int] = []
    used = [False] * gm

    def extend(depth: int) -> bool:
        prefix = order[:depth]
        if depth:
            H_cols = Counter(col.tobytes() for col in H[prefix, :].T)
            if not _columns_fit(H_cols, G[assigned, :]):
                return False
        if depth == hm:
            return True
        i = order[depth]
        for g in range(gm):
            if used[g] or g_deg[g] < h_deg[i]:
                continue
            used[g] = True
            assigned.append(g)
            if extend(depth + 1):
                return True
            assigned.pop()
            used[g] = False
        return False

    return extend(0)


def is_induced_subgraph(H: BiGraph, G: BiGraph) -> bool:
    """
    True when H is isomorphic to an induced subgraph of G.

    The bipartition may be swapped, so H^T embedding in G also counts.
    """
    if _embeds(H.bits, G.bits):
        return True
    return _embeds(H.bits.T, G.bits)


def is_isomorphic(H: BiGraph, G: BiGraph) -> bool:
    """Isomorphism up to swapping the bipartition."""
    if H.edge_count != G.edge_count:
        return False
    if H.shape == G.shape and _embeds(H.bits, G.bits):
        return True
    return H.shape == (G.n, G.m) and _embeds(H.bits.T, G.bits)


def _oriented_key(bits: np.ndarray) -> tuple[int, int, tuple[int, ...]]:
    m, n = bits.shape
    weights = 1 << np.arange(n, dtype=np.int64)
    best: tuple[int, ...] | None = None
    for perm in permutations(range(n)):
        rows = tuple(sorted(int(v) for v in bits[:, list(perm)].astype(np.int64) @ weights))
        if best is None or rows < best:
            best = rows
    return (m, n, best or ())


def canonical_key(G: BiGraph) -> tuple[int, int, tuple[int, ...]]:
    """
    Isomorphism invariant that separates non-isomorphic graphs.

    Minimum over column permutations of the sorted row encodings, taken over
    both orientations. Cost grows as n!, so it is meant for graphs with at
    most six or seven columns.
    """
    return min(_oriented_key(G.bits), _oriented_key(G.bits.T))
