"""
Graph Catalog

Named bipartite graphs: paths, cycles, the extremal graphs E_j and F_j of
each norm class, the small exceptional graphs and the obstructions.
"""

from __future__ import annotations

import re

import numpy as np

from src.exceptions import InputError
from src.models.graph import BiGraph, GraphFamily, GraphName


def sigma(n: int, cols: int | None = None) -> BiGraph:
    """Maximal path Sigma(n, cols): entry (i, j) = 1 iff j in {i, i+1}, cols in {n, n+1}."""
    cols = n if cols is None else cols
    if n < 1:
        raise InputError(f"Path needs n >= 1, got {n}")
    if cols not in (n, n + 1):
        raise InputError(f"Path Sigma({n},{cols}) needs cols in {{{n}, {n + 1}}}")
    bits = np.zeros((n, cols), dtype=np.uint8)
    for i in range(n):
        bits[i, i] = 1
        if i + 1 < cols:
            bits[i, i + 1] = 1
    return BiGraph(bits)


def cycle(n: int) -> BiGraph:
    """Cycle Lambda(n) on 2n vertices: entry (i, j) = 1 iff j in {i, i+1 mod n}."""
    if n < 1:
        raise InputError(f"Cycle needs n >= 1, got {n}")
    bits = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        bits[i, i] = 1
        bits[i, (i + 1) % n] = 1
    return BiGraph(bits)


def bracket_ones(n: int) -> BiGraph:
    """The n x (n+1) matrix [1 I_n]."""
    if n < 1:
        raise InputError(f"Bracket-ones needs n >= 1, got {n}")
    bits = np.zeros((n, n + 1), dtype=np.uint8)
    bits[:, 0] = 1
    bits[:, 1:] = np.eye(n, dtype=np.uint8)
    return BiGraph(bits)


def triangular(n: int) -> BiGraph:
    """Upper-triangular all-ones n x n matrix."""
    if n < 1:
        raise InputError(f"Triangular needs n >= 1, got {n}")
    return BiGraph(np.triu(np.ones((n, n), dtype=np.uint8)))


def _rows(*rows: str) -> BiGraph:
    return BiGraph.from_bits(len(rows), len(rows[0]), rows)


SINGLE_EDGE = _rows("1")
TRIE = _rows("111", "110", "100")
GEE7 = _rows("110", "111", "011")

OBSTRUCTIONS: dict[int, BiGraph] = {
    53: _rows("1111", "0100", "0010", "0001"),
    54: _rows("1100", "0110", "0011", "0010"),
    55: _rows("1100", "1010", "1001", "0001"),
    56: _rows("0001", "0111", "0100", "1100"),
}

E_GRAPHS: dict[int, BiGraph] = {
    1: SINGLE_EDGE,
    2: _rows("11", "01"),
    3: sigma(3, 3),
    4: _rows("100", "111", "001"),
    5: _rows("1100", "1010", "1001"),
    6: sigma(4, 4),
}

F_GRAPHS: dict[int, BiGraph] = {
    1: SINGLE_EDGE,
    2: _rows("110", "011"),
    3: cycle(4),
    4: _rows("10010", "11100", "00101"),
    5: E_GRAPHS[5],
    6: sigma(4, 5),
}


def catalog(name: GraphName) -> BiGraph:
    """
    Resolve a catalog name to its biadjacency matrix.

    Raises:
        InputError: unknown name or parameters out of range
    """
    tag, params = name.tag, name.params
    try:
        if tag == GraphFamily.SINGLE_EDGE:
            return SINGLE_EDGE
        if tag == GraphFamily.SIGMA:
            return sigma(*params)
        if tag == GraphFamily.LAMBDA:
            return cycle(*params)
        if tag == GraphFamily.E:
            return E_GRAPHS[params[0]]
        if tag == GraphFamily.F:
            return F_GRAPHS[params[0]]
        if tag == GraphFamily.TRIE:
            return TRIE
        if tag == GraphFamily.GEE7:
            return GEE7
        if tag == GraphFamily.GEE6_CYCLE:
            return cycle(3)
        if tag == GraphFamily.OBSTRUCTION:
            return OBSTRUCTIONS[params[0]]
        if tag == GraphFamily.BRACKET_ONES:
            return bracket_ones(*params)
        if tag == GraphFamily.TRIANGULAR:
            return triangular(*params)
    except (KeyError, IndexError, TypeError) as e:
        raise InputError(f"Invalid parameters for {tag.value}: {params}") from e
    raise InputError(f"Unknown catalog name {name}")


_NAME_PATTERN = re.compile(r"^(?P<tag>[A-Za-z][A-Za-z0-9-]*?)(?::(?P<args>[0-9.,]+))?$")
_EF_PATTERN = re.compile(r"^(?P<tag>[EF])(?P<k>[1-6])$")


def parse_graph_name(text: str) -> GraphName:
    """
    Parse a CLI catalog name.

    Accepted forms: "single-edge", "sigma:3,3", "sigma:3,4", "lambda:4",
    "E4", "F6", "trie", "gee7", "gee6-cycle", "obstruction:5.4",
    "bracket-ones:3", "triangular:5".
    """
    raw = text.strip()
    ef = _EF_PATTERN.match(raw)
    if ef:
        family = GraphFamily.E if ef.group("tag") == "E" else GraphFamily.F
        return GraphName(family, (int(ef.group("k")),))

    match = _NAME_PATTERN.match(raw)
    if not match:
        raise InputError(f"Cannot parse graph name {text!r}")
    try:
        family = GraphFamily(match.group("tag").lower())
    except ValueError as e:
        raise InputError(f"Unknown graph family {match.group('tag')!r}") from e
    args = match.group("args")

    if family == GraphFamily.OBSTRUCTION:
        if not args or not re.fullmatch(r"5\.[3-6]", args):
            raise InputError(f"Obstruction name must be obstruction:5.3 .. 5.6, got {text!r}")
        return GraphName(family, (int(args.replace(".", "")),))

    params = tuple(int(a) for a in args.split(",")) if args else ()
    if family == GraphFamily.SIGMA and len(params) == 1:
        params = (params[0], params[0])
    name = GraphName(family, params)
    catalog(name)
    return name


def fixed_names() -> list[GraphName]:
    """Every parameter-free catalog entry, with E_j and F_j."""
    names = [GraphName(GraphFamily.SINGLE_EDGE)]
    names += [GraphName(GraphFamily.E, (k,)) for k in E_GRAPHS]
    names += [GraphName(GraphFamily.F, (k,)) for k in F_GRAPHS]
    names += [
        GraphName(GraphFamily.TRIE),
        GraphName(GraphFamily.GEE7),
        GraphName(GraphFamily.GEE6_CYCLE),
    ]
    names += [GraphName(GraphFamily.OBSTRUCTION, (k,)) for k in OBSTRUCTIONS]
    return names
