"""
Norm Constants

Closed-form values of the seven smallest Schur idempotent norms and of the
other exact norms in the catalog, evaluated once in double precision.
"""

from __future__ import annotations

import math

ETA: tuple[float, ...] = (
    0.0,
    1.0,
    math.sqrt(4.0 / 3.0),
    (1.0 + math.sqrt(2.0)) / 2.0,
    math.sqrt(169.0 + 38.0 * math.sqrt(19.0)) / 15.0,
    math.sqrt(1.5),
    0.4 * math.sqrt(5.0 + 2.0 * math.sqrt(5.0)),
)

ETA_CLOSED_FORMS: tuple[str, ...] = (
    "0",
    "1",
    "sqrt(4/3)",
    "(1+sqrt(2))/2",
    "(1/15)sqrt(169+38sqrt(19))",
    "sqrt(3/2)",
    "(2/5)sqrt(5+2sqrt(5))",
)

TRIE_NORM = (9.0 + 4.0 * math.sqrt(6.0)) / 15.0
GEE7_NORM = 9.0 / 7.0
GEE6_CYCLE_NORM = 4.0 / 3.0
PATH_LIMIT = 4.0 / math.pi

# Obstruction lower bound (1/6) ||Y|| with ||Y||^2 = (61 + sqrt(2821)) / 2
OBSTRUCTION_53_LOWER = math.sqrt((61.0 + math.sqrt(2821.0)) / 2.0) / 6.0
OBSTRUCTION_54_TRACE_TARGET = 1.235

# Numerical norms of the four obstructions, correct to 5 decimals
OBSTRUCTION_NORMS: dict[int, float] = {
    54: 1.24131,
    55: 1.25048,
    56: 1.25655,
    53: 1.25906,
}


def bracket_ones_norm(n: int) -> float:
    """Norm of [1 I_n]: sqrt(2n/(n+1))."""
    return math.sqrt(2.0 * n / (n + 1.0))
