"""
Norm Certificates

Explicit matrices proving the exact norm of each catalog graph: a Haagerup
factorization for the upper bound, an orthogonal (or coisometric) witness
for the lower bound, and for eta_4 a positive semidefinite completion.
Obstructions carry only a lower-bound witness and the threshold it beats.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from typing import Any

import numpy as np

from src.bounds.ascent import lower_bound_ascend
from src.bounds.seeds import hadamard_seed
from src.exact.constants import (
    ETA,
    ETA_CLOSED_FORMS,
    GEE6_CYCLE_NORM,
    GEE7_NORM,
    OBSTRUCTION_53_LOWER,
    OBSTRUCTION_54_TRACE_TARGET,
    TRIE_NORM,
    bracket_ones_norm,
)
from src.exact.paths import build_path_witness, cycle_norm, path_norm
from src.exceptions import InputError
from src.graphs.catalog import E_GRAPHS, catalog, cycle, sigma
from src.models.certificate import CertificateKind, NormCertificate
from src.models.graph import GraphFamily, GraphName

# Margin above eta_6 demanded of the numerically certified obstructions
OBSTRUCTION_MARGIN = 1e-4

SQRT19 = math.sqrt(19.0)
SQRT6 = math.sqrt(6.0)


# ----------------------------------------------------------------------
# Path family
# ----------------------------------------------------------------------


def _sigma_certificate(name: GraphName, n: int, cols: int) -> NormCertificate:
    witness = build_path_witness(n)
    R = witness.R if cols == n else witness.Rt
    return NormCertificate(
        name=name,
        graph=sigma(n, cols),
        exact_value=path_norm(n),
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=witness.S,
        R=R,
        U=witness.U.T,
        witness_bits=sigma(n, n),
        closed_form=f"(2/{n + 1})cot(pi/{2 * (n + 1)})",
    )


def _cycle_certificate(name: GraphName, n: int) -> NormCertificate:
    if n == 3:
        return _gee6_cycle_certificate(name)
    if n < 2 or n % 2:
        raise InputError(f"Cycle certificates exist for n = 3 and even n >= 2, got {n}")
    # For odd p = n - 1 the extended path matrix is the cycle Lambda(n)
    witness = build_path_witness(n - 1)
    return NormCertificate(
        name=name,
        graph=cycle(n),
        exact_value=cycle_norm(n),
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=witness.St,
        R=witness.Rt,
        U=witness.U.T,
        witness_bits=sigma(n - 1, n - 1),
        closed_form=f"(2/{n})cot(pi/{2 * n})",
    )


def _gee6_cycle_certificate(name: GraphName) -> NormCertificate:
    """Lambda(3): vectors at the vertices of an equilateral triangle."""
    graph = catalog(GraphName(GraphFamily.GEE6_CYCLE))
    alpha = beta = math.sqrt(2.0 / 3.0)
    angles = 2.0 * math.pi * np.arange(3) / 3.0
    w = np.vstack([np.cos(angles), np.sin(angles)])
    S = np.vstack([np.full(3, alpha), beta * w])
    R = np.vstack([np.full(3, alpha), -beta * w[:, (np.arange(3) + 1) % 3]])
    B = graph.as_dense()
    U = (2.0 / 3.0) * np.ones((3, 3)) - (1.0 - B)
    return NormCertificate(
        name=name,
        graph=graph,
        exact_value=GEE6_CYCLE_NORM,
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=S,
        R=R,
        U=U,
        witness_bits=graph,
        closed_form="4/3",
    )


# ----------------------------------------------------------------------
# Exceptional graphs
# ----------------------------------------------------------------------


def _single_edge_certificate(name: GraphName) -> NormCertificate:
    one = np.ones((1, 1))
    return NormCertificate(
        name=name,
        graph=E_GRAPHS[1],
        exact_value=1.0,
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=one,
        R=one,
        U=one,
        witness_bits=E_GRAPHS[1],
        closed_form="1",
    )


def eta4_completion_blocks() -> tuple[np.ndarray, np.ndarray]:
    """
    The blocks P (3x3) and Q (5x5) of the rank-3 psd completion of F_4.

    The completion of E_4 uses the leading 3x3 block of Q.
    """
    eta = ETA[4]
    alpha = math.sqrt(139.0 - 22.0 * SQRT19) / 15.0
    beta = -math.sqrt(24.0 - 2.0 * SQRT19) / 15.0
    gamma = (2.0 / 15.0) * math.sqrt(16.0 + 2.0 * SQRT19)
    delta = math.sqrt(424.0 - 82.0 * SQRT19) / 15.0
    sigma_ = math.sqrt(61.0 + 2.0 * SQRT19) / 15.0
    tau = -math.sqrt(256.0 - 58.0 * SQRT19) / 15.0

    P = np.array(
        [
            [eta, alpha, beta],
            [alpha, eta, alpha],
            [beta, alpha, eta],
        ]
    )
    Q = np.array(
        [
            [eta, gamma, delta, sigma_, tau],
            [gamma, eta, gamma, -sigma_, -sigma_],
            [delta, gamma, eta, tau, sigma_],
            [sigma_, -sigma_, tau, 2.0 * sigma_, alpha],
            [tau, -sigma_, sigma_, alpha, 2.0 * sigma_],
        ]
    )
    return P, Q


def eta4_witness() -> np.ndarray:
    """Orthogonal U with ||E_4 o U|| = eta_4."""
    root = math.sqrt(74.0 - 2.0 * SQRT19)
    return (
        np.array(
            [
                [8.0 + SQRT19, -root, -7.0 + SQRT19],
                [root, 1.0 + 2.0 * SQRT19, root],
                [-7.0 + SQRT19, -root, 8.0 + SQRT19],
            ]
        )
        / 15.0
    )


def _eta4_certificate(name: GraphName) -> NormCertificate:
    P, Q = eta4_completion_blocks()
    graph = catalog(name)
    if graph.n == 3:
        Q = Q[:3, :3]
    return NormCertificate(
        name=name,
        graph=graph,
        exact_value=ETA[4],
        kind=CertificateKind.PSD_COMPLETION,
        U=eta4_witness(),
        witness_bits=E_GRAPHS[4],
        P=P,
        Q=Q,
        closed_form=ETA_CLOSED_FORMS[4],
    )


def _eta5_certificate(name: GraphName) -> NormCertificate:
    """E_5 = F_5 = [1 I_3]."""
    scale = 54.0**0.25
    S = (
        np.array(
            [
                [2.0 * SQRT6, 2.0 * SQRT6, 2.0 * SQRT6],
                [-2.0 * math.sqrt(3.0), math.sqrt(3.0), math.sqrt(3.0)],
                [0.0, 3.0, -3.0],
            ]
        )
        / (2.0 * scale)
    )
    R = (
        np.array(
            [
                [3.0, 1.0, 1.0, 1.0],
                [0.0, -2.0 * math.sqrt(2.0), math.sqrt(2.0), math.sqrt(2.0)],
                [0.0, 0.0, SQRT6, -SQRT6],
            ]
        )
        / scale
    )
    root5 = math.sqrt(5.0)
    V = (
        np.array(
            [
                [root5, 3.0, -1.0, -1.0],
                [root5, -1.0, 3.0, -1.0],
                [root5, -1.0, -1.0, 3.0],
            ]
        )
        / 4.0
    )
    return NormCertificate(
        name=name,
        graph=E_GRAPHS[5],
        exact_value=ETA[5],
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=S,
        R=R,
        U=V,
        witness_bits=E_GRAPHS[5],
        closed_form=ETA_CLOSED_FORMS[5],
    )


def _trie_certificate(name: GraphName) -> NormCertificate:
    graph = catalog(name)
    a = math.sqrt((-3.0 + 2.0 * SQRT6) / 15.0)
    b = 0.5 * math.sqrt((3.0 + 8.0 * SQRT6) / 15.0)
    c = math.sqrt((9.0 + 4.0 * SQRT6) / 30.0)
    S = np.array([[1.0, 1.0, 0.5], [a, -a, b], [-a, a, c]])
    R = np.array([[1.0, 1.0, 0.5], [a, -a, b], [a, -a, -c]])
    p = math.sqrt(54.0 - 6.0 * SQRT6)
    q = 2.0 * math.sqrt(21.0 + 6.0 * SQRT6)
    r = -2.0 * math.sqrt(27.0 - 3.0 * SQRT6)
    U = (
        np.array(
            [
                [9.0 - SQRT6, p, q],
                [p, 3.0 * (1.0 + SQRT6), r],
                [q, r, 3.0 - 2.0 * SQRT6],
            ]
        )
        / 15.0
    )
    return NormCertificate(
        name=name,
        graph=graph,
        exact_value=TRIE_NORM,
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=S,
        R=R,
        U=U,
        witness_bits=graph,
        closed_form="(9+4sqrt(6))/15",
    )


def _gee7_certificate(name: GraphName) -> NormCertificate:
    graph = catalog(name)
    r2, r6, r7 = math.sqrt(2.0), SQRT6, math.sqrt(7.0)
    S = np.array([[3.0, 4.0, 3.0], [-r2, r2, -r2], [-r7, 0.0, r7]]) / math.sqrt(14.0)
    R = np.array([[3.0, 4.0, 3.0], [r2, -r2, r2], [-r7, 0.0, r7]]) / math.sqrt(14.0)
    U = np.array([[3.0, 2.0 * r6, -4.0], [2.0 * r6, 1.0, 2.0 * r6], [-4.0, 2.0 * r6, 3.0]]) / 7.0
    return NormCertificate(
        name=name,
        graph=graph,
        exact_value=GEE7_NORM,
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=S,
        R=R,
        U=U,
        witness_bits=graph,
        closed_form="9/7",
    )


def bracket_ones_factors(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Balanced factorization and coisometric witness for [1 I_n].

    S = a f1^T + b(I - J/n) and R = [c f, d f1^T + e(I - J/n)] with
    f = 1/sqrt(n); V = [g 1, I - J/(n+1)] with g = sqrt(n+2)/(n+1).
    """
    if n < 1:
        raise InputError(f"Bracket-ones needs n >= 1, got {n}")
    ones = np.ones(n)
    f = ones / math.sqrt(n)
    centered = np.eye(n) - np.ones((n, n)) / n
    a = ((n + 1.0) / (2.0 * n)) ** 0.25
    b = math.sqrt(n * a * a / (n + 1.0))
    c, d, e = 1.0 / a, 1.0 / (n * a), 1.0 / b
    S = a * np.outer(f, ones) + b * centered
    R = np.column_stack([c * f, d * np.outer(f, ones) + e * centered])
    g = math.sqrt(n + 2.0) / (n + 1.0)
    V = np.column_stack([g * ones, np.eye(n) - np.ones((n, n)) / (n + 1.0)])
    return S, R, V


def _bracket_ones_certificate(name: GraphName, n: int) -> NormCertificate:
    S, R, V = bracket_ones_factors(n)
    graph = catalog(name)
    return NormCertificate(
        name=name,
        graph=graph,
        exact_value=bracket_ones_norm(n),
        kind=CertificateKind.FACTORIZATION_WITNESS,
        S=S,
        R=R,
        U=V,
        witness_bits=graph,
        closed_form=f"sqrt({2 * n}/{n + 1})",
    )


# ----------------------------------------------------------------------
# Obstructions
# ----------------------------------------------------------------------


OBSTRUCTION_55_PRINTED_U = (
    np.array(
        [
            [math.sqrt(5.0), 3.0, -1.0, -1.0],
            [math.sqrt(5.0), -1.0, 3.0, -1.0],
            [math.sqrt(5.0), -1.0, -1.0, 3.0],
            [-1.0, math.sqrt(5.0), math.sqrt(5.0), math.sqrt(5.0)],
        ]
    )
    / 4.0
)


def _obstruction54_vectors() -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors of the n = 4 path construction; x weights the rows of B^T, y its columns."""
    sqrt5 = math.sqrt(5.0)
    x = np.array(
        [math.sqrt(0.5 * (3.0 - sqrt5)), math.sqrt(0.5 * (1.0 + sqrt5)), math.sqrt(2.0), 1.0]
    ) / sqrt5
    return x, x[::-1].copy()


def _obstruction_certificate(name: GraphName, number: int) -> NormCertificate:
    graph = catalog(name)
    common: dict[str, Any] = {
        "name": name,
        "graph": graph,
        "exact_value": None,
        "kind": CertificateKind.LOWER_ONLY,
    }

    if number == 53:
        U = np.array([[3, 3, 3, 3], [3, -5, 1, 1], [3, 1, -5, 1], [3, 1, 1, -5]], dtype=float) / 6.0
        return NormCertificate(
            **common,
            U=U,
            witness_bits=graph,
            target=TRIE_NORM,
            target_label="(9+4sqrt(6))/15",
            closed_form=f"sqrt((61+sqrt(2821))/2)/6 = {OBSTRUCTION_53_LOWER:.6f}",
        )

    if number == 54:
        x, y = _obstruction54_vectors()
        return NormCertificate(
            **common,
            x=x,
            y=y,
            target=OBSTRUCTION_54_TRACE_TARGET,
            target_label="1.235",
        )

    if number == 55:
        ascent = lower_bound_ascend(graph.as_dense(), U0=hadamard_seed(4))
        return NormCertificate(
            **common,
            U=ascent.U,
            witness_bits=graph,
            target=ETA[6] + OBSTRUCTION_MARGIN,
            target_label="eta_6 + 1e-4",
            printed_U=OBSTRUCTION_55_PRINTED_U,
        )

    if number == 56:
        h = 1.0 / math.sqrt(2.0)
        U = np.array(
            [
                [0.0, 0.0, -h, h],
                [0.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0],
                [-h, 2.0 / 3.0, -1.0 / 6.0, -1.0 / 6.0],
                [h, 2.0 / 3.0, -1.0 / 6.0, -1.0 / 6.0],
            ]
        )
        return NormCertificate(
            **common,
            U=U,
            witness_bits=graph,
            target=ETA[6] + OBSTRUCTION_MARGIN,
            target_label="eta_6 + 1e-4",
        )

    raise InputError(f"No certificate for obstruction {number}")


# ----------------------------------------------------------------------
# Lookup
# ----------------------------------------------------------------------


def _ef_certificate(name: GraphName) -> NormCertificate:
    k = name.params[0]
    maximal = name.tag == GraphFamily.F
    builders: dict[int, Callable[[], NormCertificate]] = {
        1: lambda: _single_edge_certificate(name),
        2: lambda: _sigma_certificate(name, 2, 3 if maximal else 2),
        3: lambda: _cycle_certificate(name, 4) if maximal else _sigma_certificate(name, 3, 3),
        4: lambda: _eta4_certificate(name),
        5: lambda: _eta5_certificate(name),
        6: lambda: _sigma_certificate(name, 4, 5 if maximal else 4),
    }
    return builders[k]()


def certificate(name: GraphName) -> NormCertificate:
    """
    Stored certificate for a catalog graph.

    Raises:
        InputError: the graph has no certificate
    """
    tag, params = name.tag, name.params
    if tag == GraphFamily.SINGLE_EDGE:
        return _single_edge_certificate(name)
    if tag == GraphFamily.SIGMA:
        n, cols = params
        if n < 1 or cols not in (n, n + 1):
            raise InputError(f"Invalid path {name}")
        return _sigma_certificate(name, n, cols)
    if tag == GraphFamily.LAMBDA:
        return _cycle_certificate(name, params[0])
    if tag in (GraphFamily.E, GraphFamily.F):
        catalog(name)
        return _ef_certificate(name)
    if tag == GraphFamily.TRIE:
        return _trie_certificate(name)
    if tag == GraphFamily.GEE7:
        return _gee7_certificate(name)
    if tag == GraphFamily.GEE6_CYCLE:
        return _gee6_cycle_certificate(name)
    if tag == GraphFamily.BRACKET_ONES:
        return _bracket_ones_certificate(name, params[0])
    if tag == GraphFamily.OBSTRUCTION:
        catalog(name)
        return _obstruction_certificate(name, params[0])
    raise InputError(f"No certificate for {name}")


def certificate_names(bracket_ones_max_n: int = 6) -> list[GraphName]:
    """Every certificate of the suite, in table order."""
    names = [GraphName(GraphFamily.SINGLE_EDGE)]
    names += [GraphName(GraphFamily.SIGMA, (n, c)) for n in (2, 3, 4) for c in (n, n + 1)]
    names += [GraphName(GraphFamily.LAMBDA, (n,)) for n in (2, 4, 6)]
    names += [GraphName(GraphFamily.E, (k,)) for k in range(1, 7)]
    names += [GraphName(GraphFamily.F, (k,)) for k in range(1, 7)]
    names += [
        GraphName(GraphFamily.TRIE),
        GraphName(GraphFamily.GEE7),
        GraphName(GraphFamily.GEE6_CYCLE),
    ]
    names += [GraphName(GraphFamily.BRACKET_ONES, (n,)) for n in range(1, bracket_ones_max_n + 1)]
    names += [GraphName(GraphFamily.OBSTRUCTION, (k,)) for k in (53, 54, 55, 56)]
    return names
