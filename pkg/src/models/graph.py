"""
Bipartite Graph Model

Finite bipartite graphs stored as m x n 0-1 biadjacency matrices, and the
names of the graph families used throughout the catalog.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from src.exceptions import InputError


@dataclass(frozen=True, eq=False)
class BiGraph:
    """
    Bipartite graph on row vertices r_1..r_m and column vertices c_1..c_n.

    Entry (i, j) of ``bits`` is 1 exactly when r_i and c_j are adjacent.
    Equality is label-sensitive; use ``is_isomorphic`` for structure.
    """

    bits: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.bits)
        if arr.ndim != 2:
            raise InputError(f"Biadjacency matrix must be 2-dimensional, got shape {arr.shape}")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise InputError("Biadjacency entries must be 0 or 1")
        frozen = np.array(arr, dtype=np.uint8, copy=True)
        frozen.setflags(write=False)
        object.__setattr__(self, "bits", frozen)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_bits(cls, m: int, n: int, rows: Sequence[Sequence[int] | str]) -> BiGraph:
        """
        Build a graph from explicit rows.

        Args:
            m: Number of row vertices
            n: Number of column vertices
            rows: m rows, each a string of '0'/'1' or a sequence of 0/1 ints

        Returns:
            The BiGraph with those bits
        """
        if m < 0 or n < 0:
            raise InputError(f"Dimensions must be non-negative, got {m}x{n}")
        if len(rows) != m:
            raise InputError(f"Expected {m} rows, got {len(rows)}")

        data = np.zeros((m, n), dtype=np.uint8)
        for i, row in enumerate(rows):
            symbols = list(row)
            if len(symbols) != n:
                raise InputError(f"Row {i} has length {len(symbols)}, expected {n}")
            for j, symbol in enumerate(symbols):
                if symbol in (1, "1", True):
                    data[i, j] = 1
                elif symbol in (0, "0", False):
                    data[i, j] = 0
                else:
                    raise InputError(f"Row {i} has invalid symbol {symbol!r} at column {j}")
        return cls(data)

    @classmethod
    def from_text(cls, text: str) -> BiGraph:
        """Parse the line format: one row per line, characters '0'/'1'."""
        rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not rows:
            return cls(np.zeros((0, 0), dtype=np.uint8))
        return cls.from_bits(len(rows), len(rows[0]), rows)

    @classmethod
    def from_json(cls, payload: str | dict[str, Any]) -> BiGraph:
        """Parse {"m": 2, "n": 3, "rows": ["110", "011"]}."""
        if isinstance(payload, str):
            try:
                payload = json.loads(payload)
            except json.JSONDecodeError as e:
                raise InputError(f"Invalid JSON matrix: {e}") from e
        if not isinstance(payload, dict):
            raise InputError("JSON matrix must be an object with m, n, rows")
        try:
            m, n, rows = int(payload["m"]), int(payload["n"]), payload["rows"]
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"JSON matrix needs integer m, n and a rows list: {e}") from e
        return cls.from_bits(m, n, rows)

    @classmethod
    def parse(cls, text: str) -> BiGraph:
        """Accept either the JSON or the line format."""
        stripped = text.strip()
        if stripped.startswith("{"):
            return cls.from_json(stripped)
        return cls.from_text(stripped)

    @classmethod
    def empty(cls, m: int, n: int) -> BiGraph:
        """Edgeless graph with m rows and n columns."""
        return cls(np.zeros((m, n), dtype=np.uint8))

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of row vertices."""
        return int(self.bits.shape[0])

    @property
    def n(self) -> int:
        """Number of column vertices."""
        return int(self.bits.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def T(self) -> BiGraph:
        """Same graph with the bipartition swapped."""
        return BiGraph(self.bits.T)

    @property
    def edge_count(self) -> int:
        return int(self.bits.sum())

    def row_degrees(self) -> np.ndarray:
        return self.bits.sum(axis=1).astype(int)

    def col_degrees(self) -> np.ndarray:
        return self.bits.sum(axis=0).astype(int)

    def as_dense(self) -> np.ndarray:
        """Float copy of the biadjacency matrix."""
        return self.bits.astype(float)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> BiGraph:
        """Induced subgraph on the given row and column indices (in order)."""
        return BiGraph(self.bits[np.ix_(list(rows), list(cols))])

    def to_text(self) -> str:
        return "\n".join("".join(str(int(b)) for b in row) for row in self.bits)

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "rows": ["".join(str(int(b)) for b in row) for row in self.bits],
        }

    def key(self) -> tuple[int, int, bytes]:
        return (self.m, self.n, self.bits.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiGraph):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        rows = ",".join("".join(str(int(b)) for b in row) for row in self.bits)
        return f"BiGraph({self.m}x{self.n}: {rows})"


class GraphFamily(str, Enum):
    """Named graph families of the catalog."""

    SINGLE_EDGE = "single-edge"
    SIGMA = "sigma"  # paths Sigma(n,n), Sigma(n,n+1)
    LAMBDA = "lambda"  # cycles
    E = "E"
    F = "F"
    TRIE = "trie"
    GEE7 = "gee7"
    GEE6_CYCLE = "gee6-cycle"
    OBSTRUCTION = "obstruction"
    BRACKET_ONES = "bracket-ones"
    TRIANGULAR = "triangular"


@dataclass(frozen=True)
class GraphName:
    """
    A catalog name: a family tag plus its integer parameters.

    Sigma carries (rows, cols) with cols in {rows, rows + 1}; E and F carry
    k in 1..6; obstructions carry 53..56; Lambda, BracketOnes and
    Triangular carry n.
    """

    tag: GraphFamily
    params: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        if self.tag in (GraphFamily.E, GraphFamily.F):
            return f"{self.tag.value}{self.params[0]}"
        if self.tag == GraphFamily.OBSTRUCTION:
            number = self.params[0]
            return f"obstruction:{number // 10}.{number % 10}"
        if not self.params:
            return self.tag.value
        return f"{self.tag.value}:{','.join(str(p) for p in self.params)}"

    def __str__(self) -> str:
        return self.label
