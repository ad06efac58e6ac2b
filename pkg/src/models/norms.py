"""
Norm Estimation Models

Haagerup factorizations and certified two-sided norm intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.linalg import col_bound, hadamard, pad_square, spectral_norm


@dataclass(frozen=True)
class Factorization:
    """
    A Haagerup factorization target = S^T R.

    S is k x m and R is k x n; the product of column bounds c(S)c(R) is an
    upper bound for the Schur multiplier norm of the target.
    """

    S: np.ndarray
    R: np.ndarray
    target: np.ndarray

    @property
    def k(self) -> int:
        return int(self.S.shape[0])

    @property
    def c_S(self) -> float:
        return col_bound(self.S)

    @property
    def c_R(self) -> float:
        return col_bound(self.R)

    @property
    def product(self) -> float:
        """The upper bound c(S) c(R)."""
        return self.c_S * self.c_R

    def residual(self) -> float:
        """Largest entrywise deviation of S^T R from the target."""
        if self.target.size == 0:
            return 0.0
        return float(np.max(np.abs(self.S.T @ self.R - self.target)))

    def balanced(self) -> Factorization:
        """Rescale so that c(S) = c(R); the product is unchanged."""
        c_s, c_r = self.c_S, self.c_R
        if c_s == 0.0 or c_r == 0.0:
            return self
        scale = np.sqrt(c_r / c_s)
        return Factorization(self.S * scale, self.R / scale, self.target)

    def transpose(self) -> Factorization:
        """Factorization of the transposed target."""
        return Factorization(self.R, self.S, self.target.T)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "c_S": self.c_S,
            "c_R": self.c_R,
            "product": self.product,
            "S": self.S.tolist(),
            "R": self.R.tolist(),
        }


@dataclass
class NormBounds:
    """
    Certified interval [lower, upper] for a Schur multiplier norm.

    ``witness_U`` is orthogonal of size max(m, n); the target is zero
    padded to that size before the Schur product is formed. ``witness_x``
    and ``witness_y`` are the unit vectors of the final top singular pair.
    """

    lower: float
    upper: float
    witness_U: np.ndarray
    witness_x: np.ndarray
    witness_y: np.ndarray
    factorization: Factorization
    iterations: int
    converged: bool
    tol: float = 1e-6
    restarts_used: int = 1
    lower_history: list[float] = field(default_factory=list, repr=False)
    upper_history: list[float] = field(default_factory=list, repr=False)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def recompute(self, A: np.ndarray) -> tuple[float, float]:
        """Re-derive (lower, upper) from the stored witnesses."""
        lower = spectral_norm(hadamard(pad_square(A), self.witness_U))
        return lower, self.factorization.product

    def to_dict(self, include_witnesses: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "lower": self.lower,
            "upper": self.upper,
            "midpoint": self.midpoint,
            "converged": self.converged,
            "iterations": self.iterations,
            "restarts_used": self.restarts_used,
            "tol": self.tol,
        }
        if include_witnesses:
            data["witness_U"] = self.witness_U.tolist()
            data["witness_x"] = self.witness_x.tolist()
            data["witness_y"] = self.witness_y.tolist()
            data["factorization"] = self.factorization.to_dict()
        return data
