"""
Lower-Bound Ascent

For any orthogonal U, ||A o U|| is a lower bound for the Schur multiplier
norm of A. The ascent alternates between the top singular pair of A o U
and the orthogonal polar factor of A o (y x^T); each half-step can only
increase y^T (A o U) x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from src.exceptions import InputError
from src.linalg import as_dense, hadamard, pad_square, polar_orthogonal, spectral_norm, svd

# Rounding slack allowed when asserting monotonicity
MONOTONE_SLACK = 1e-12


@dataclass
class AscentResult:
    """Final witness of an ascent run; x has length n and y length m."""

    U: np.ndarray
    x: np.ndarray
    y: np.ndarray
    lower: float
    iterations: int
    history: list[float] = field(default_factory=list, repr=False)


def _top_pair(M: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    """Top singular value with left (y) and right (x) vectors, signs fixed for determinism."""
    decomposition = svd(M)
    y = decomposition.left[:, 0]
    x = decomposition.right[:, 0]
    pivot = int(np.argmax(np.abs(x)))
    if x[pivot] < 0:
        x, y = -x, -y
    return decomposition.top, x, y


def _trim_unit(v: np.ndarray, size: int) -> np.ndarray:
    trimmed = v[:size].copy()
    norm = np.linalg.norm(trimmed)
    return trimmed / norm if norm > 0 else trimmed


def lower_bound_ascend(
    A: np.ndarray,
    U0: np.ndarray | None = None,
    max_iters: int = 500,
    tol: float = 1e-13,
) -> AscentResult:
    """
    Alternating SVD / polar ascent for a lower bound on ||A||_Schur.

    Args:
        A: m x n real matrix (zero-padded to d x d, d = max(m, n))
        U0: d x d orthogonal start; identity when omitted
        max_iters: Iteration cap
        tol: Stop when an iteration improves the objective by less than this

    Returns:
        AscentResult whose ``lower`` equals spectral_norm(pad(A) o U)
    """
    arr = as_dense(A)
    m, n = arr.shape
    padded = pad_square(arr)
    d = padded.shape[0]

    if d == 0 or not np.any(arr):
        U = np.eye(d)
        return AscentResult(U=U, x=_unit(n), y=_unit(m), lower=0.0, iterations=0, history=[0.0])

    U = np.eye(d) if U0 is None else as_dense(U0)
    if U.shape != (d, d):
        raise InputError(f"Seed must be {d}x{d} for a {m}x{n} matrix, got {U.shape}")

    value, x, y = _top_pair(hadamard(padded, U))
    history = [value]
    iterations = 0

    for iterations in range(1, max_iters + 1):
        U = polar_orthogonal(hadamard(padded, np.outer(y, x)))
        value, x, y = _top_pair(hadamard(padded, U))
        if value < history[-1] - MONOTONE_SLACK * max(1.0, history[-1]):
            logger.warning(f"Ascent objective decreased at iteration {iterations}: {history[-1]} -> {value}")
        improvement = value - history[-1]
        history.append(value)
        if improvement < tol:
            break

    lower = spectral_norm(hadamard(padded, U))
    logger.debug(f"Ascent {m}x{n}: lower={lower:.12f} after {iterations} iterations")
    return AscentResult(
        U=U,
        x=_trim_unit(x, n),
        y=_trim_unit(y, m),
        lower=lower,
        iterations=iterations,
        history=history,
    )


def _unit(size: int) -> np.ndarray:
    v = np.zeros(size)
    if size:
        v[0] = 1.0
    return v
