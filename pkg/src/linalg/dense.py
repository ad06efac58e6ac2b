"""
Dense Matrix Services

Spectral and trace norms, SVD, polar factor, Schur (entrywise) product,
Haagerup column bound and psd/rank checks for small real matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
from numpy.typing import ArrayLike

from src.exceptions import InputError


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD: A = left @ diag(values) @ right.T with values descending."""

    values: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.values) @ self.right.T

    @property
    def top(self) -> float:
        return float(self.values[0]) if self.values.size else 0.0


def as_dense(A: ArrayLike) -> np.ndarray:
    """Validate and convert to a 2-D float64 array with finite entries."""
    arr = np.array(A, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
    if arr.ndim != 2:
        raise InputError(f"Expected a matrix, got array of shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError("Matrix entries must be finite")
    return arr


def svd(A: ArrayLike) -> SvdResult:
    """Thin singular value decomposition."""
    arr = as_dense(A)
    m, n = arr.shape
    if m == 0 or n == 0:
        k = 0
        return SvdResult(np.zeros(k), np.zeros((m, k)), np.zeros((n, k)))
    left, values, right_t = np.linalg.svd(arr, full_matrices=False)
    return SvdResult(values, left, right_t.T)


def spectral_norm(A: ArrayLike) -> float:
    """Largest singular value; 0 for empty matrices."""
    arr = as_dense(A)
    if arr.size == 0:
        return 0.0
    return float(np.linalg.norm(arr, 2))


def trace_norm(A: ArrayLike) -> float:
    """Sum of singular values."""
    arr = as_dense(A)
    if arr.size == 0:
        return 0.0
    return float(np.sum(np.linalg.svd(arr, compute_uv=False)))


def hadamard(A: ArrayLike, B: ArrayLike) -> np.ndarray:
    """Schur (entrywise) product of equally shaped matrices."""
    a, b = as_dense(A), as_dense(B)
    if a.shape != b.shape:
        raise InputError(f"Schur product needs equal shapes, got {a.shape} and {b.shape}")
    return a * b


def col_bound(A: ArrayLike) -> float:
    """Maximum Euclidean norm of a column; 0 for empty matrices."""
    arr = as_dense(A)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(arr, axis=0)))


def polar_orthogonal(M: ArrayLike) -> np.ndarray:
    """
    Orthogonal polar factor of a square matrix.

    The returned U maximises <U, M>_F over orthogonal matrices, and the
    maximum equals trace_norm(M).
    """
    arr = as_dense(M)
    if arr.shape[0] != arr.shape[1]:
        raise InputError(f"Polar factor needs a square matrix, got {arr.shape}")
    if arr.size == 0:
        return arr.copy()
    u, _ = sla.polar(arr, side="right")
    return np.asarray(u)


def orthogonality_defect(U: ArrayLike) -> float:
    """
    Distance of U from an isometry or coisometry.

    Wide matrices are measured by ||UU^T - I||, tall ones by ||U^TU - I||.
    """
    arr = as_dense(U)
    m, n = arr.shape
    if m <= n:
        gram = arr @ arr.T
        return float(np.max(np.abs(gram - np.eye(m)))) if m else 0.0
    gram = arr.T @ arr
    return float(np.max(np.abs(gram - np.eye(n))))


def psd_rank_check(C: ArrayLike, rank: int, tol: float) -> bool:
    """
    Check that a symmetric matrix is psd with at most ``rank`` significant
    eigenvalues.

    Raises:
        InputError: C is not square or not symmetric within tol
    """
    arr = as_dense(C)
    if arr.shape[0] != arr.shape[1]:
        raise InputError(f"psd check needs a square matrix, got {arr.shape}")
    if arr.size == 0:
        return True
    scale = max(1.0, float(np.max(np.abs(arr))))
    if np.max(np.abs(arr - arr.T)) > tol * scale:
        raise InputError("psd check needs a symmetric matrix")

    eigenvalues = sla.eigvalsh((arr + arr.T) / 2.0)[::-1]
    norm = max(float(np.max(np.abs(eigenvalues))), np.finfo(float).tiny)
    if eigenvalues[-1] < -tol * norm:
        return False
    return bool(np.all(np.abs(eigenvalues[rank:]) <= tol * norm))


def symmetric_sqrt(M: ArrayLike) -> np.ndarray:
    """Principal square root of a symmetric psd matrix (negative eigenvalues clipped)."""
    arr = as_dense(M)
    eigenvalues, vectors = sla.eigh((arr + arr.T) / 2.0)
    root = np.sqrt(np.clip(eigenvalues, 0.0, None))
    return (vectors * root) @ vectors.T


def gram_factor(C: ArrayLike, rel_tol: float = 1e-12) -> np.ndarray:
    """
    Factor a symmetric psd matrix as C = G^T G.

    G has one row per eigenvalue above rel_tol * max eigenvalue, so its
    row count is the numerical rank of C.
    """
    arr = as_dense(C)
    eigenvalues, vectors = sla.eigh((arr + arr.T) / 2.0)
    top = float(np.max(eigenvalues)) if eigenvalues.size else 0.0
    keep = eigenvalues > rel_tol * max(top, 0.0)
    if not np.any(keep):
        return np.zeros((0, arr.shape[0]))
    return (vectors[:, keep] * np.sqrt(eigenvalues[keep])).T


def pad_square(A: ArrayLike) -> np.ndarray:
    """Zero-pad to a d x d matrix with d = max(m, n)."""
    arr = as_dense(A)
    m, n = arr.shape
    d = max(m, n)
    padded = np.zeros((d, d))
    padded[:m, :n] = arr
    return padded


def numerical_rank(A: ArrayLike, rel_tol: float = 1e-10) -> int:
    """Number of singular values above rel_tol * largest."""
    values = svd(A).values
    if values.size == 0 or values[0] == 0.0:
        return 0
    return int(np.sum(values > rel_tol * values[0]))
