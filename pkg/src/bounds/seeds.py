"""
Orthogonal Seeds

Starting points for the lower-bound ascent: normalized Hadamard matrices
when the size is a power of two, otherwise seeded random orthogonal
matrices with no entry close to zero.
"""

from __future__ import annotations

import numpy as np
from loguru import logger

from src.exceptions import InputError

MIN_ENTRY = 1e-3
MAX_RESAMPLES = 1000

H2 = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def hadamard_seed(n: int) -> np.ndarray:
    """H2 tensored with itself log2(n) times."""
    if not is_power_of_two(n):
        raise InputError(f"Hadamard seed needs a power of two, got {n}")
    H = np.ones((1, 1))
    while H.shape[0] < n:
        H = np.kron(H, H2)
    return H


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix from the QR factorization of a Gaussian matrix."""
    Z = rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    signs = np.sign(np.diag(R))
    signs[signs == 0] = 1.0
    return Q * signs


def seed_orthogonal(n: int, seed: int = 0, prefer_hadamard: bool = True) -> np.ndarray:
    """
    Orthogonal n x n seed without small entries.

    Args:
        n: Size
        seed: Seed for the random branch
        prefer_hadamard: Use H2^{(x)k} when n = 2^k

    Returns:
        Orthogonal matrix with every |entry| >= 1e-3
    """
    if n < 1:
        raise InputError(f"Seed size must be >= 1, got {n}")
    if prefer_hadamard and is_power_of_two(n):
        return hadamard_seed(n)
    if n == 1:
        return np.ones((1, 1))

    rng = np.random.default_rng(seed)
    for attempt in range(MAX_RESAMPLES):
        Q = random_orthogonal(n, rng)
        if np.min(np.abs(Q)) >= MIN_ENTRY:
            if attempt:
                logger.debug(f"Orthogonal seed n={n} accepted after {attempt + 1} draws")
            return Q
    raise InputError(f"No orthogonal seed of size {n} without small entries after {MAX_RESAMPLES} draws")
