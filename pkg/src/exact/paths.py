"""
Path and Cycle Norms

Closed-form norms of the paths Sigma(n,n), Sigma(n,n+1) and the cycles
Lambda(n), and the explicit extremal construction for paths: a
factorization B = S^T R attaining the Haagerup bound together with an
orthogonal U and unit vectors x, y with <(B o U^T) x, y> = c(S) c(R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.linalg as sla
from loguru import logger

from src.exact.trig import PathTrig
from src.exceptions import InputError, NumericalError
from src.linalg import col_bound, hadamard, orthogonality_defect, polar_orthogonal

ORTHOGONALITY_DRIFT = 1e-10


def cycle_norm(n: int) -> float:
    """Norm of Lambda(n): (2/n)cot(pi/2n) for even n, (2/n)csc(pi/2n) for odd n."""
    if n < 2:
        raise InputError(f"Cycle norm needs n >= 2, got {n}")
    theta = math.pi / (2 * n)
    if n % 2 == 0:
        return 2.0 / n / math.tan(theta)
    return 2.0 / n / math.sin(theta)


def path_norm(n: int) -> float:
    """Norm of Sigma(n,n) and Sigma(n,n+1): (2/(n+1))cot(pi/(2(n+1)))."""
    if n < 1:
        raise InputError(f"Path norm needs n >= 1, got {n}")
    return 2.0 / (n + 1) / math.tan(math.pi / (2 * (n + 1)))


def popa_bounds(n: int) -> tuple[float, float]:
    """Older two-sided estimate (1/n)(csc(pi/(4n+2)) - 1) <= ||Sigma(n,n)|| <= path_norm(n)."""
    if n < 1:
        raise InputError(f"Path bounds need n >= 1, got {n}")
    lower = (1.0 / math.sin(math.pi / (4 * n + 2)) - 1.0) / n
    return lower, path_norm(n)


# ----------------------------------------------------------------------
# Building blocks
# ----------------------------------------------------------------------


def rotation_block(n: int) -> np.ndarray:
    """
    Orthogonal block-rotation W.

    Even n: rho + rho^3 + ... + rho^(n-1) (block diagonal).
    Odd n: [1] + rho^2 + rho^4 + ... + rho^(n-1).
    """
    trig = PathTrig(n)
    if n % 2 == 0:
        blocks = [trig.rotation(s) for s in range(1, n, 2)]
    else:
        blocks = [np.ones((1, 1))] + [trig.rotation(s) for s in range(2, n, 2)]
    return sla.block_diag(*blocks)


def seed_vector(n: int) -> np.ndarray:
    """v = (1,0,1,0,...) for even n, (1,1,0,1,0,...) for odd n."""
    v = np.zeros(n)
    if n % 2 == 0:
        v[0::2] = 1.0
    else:
        v[0] = 1.0
        v[1::2] = 1.0
    return v


def _r_entry(trig: PathTrig, j: int) -> float:
    n = trig.n
    if j == 1 and n % 2 == 1:
        return math.sqrt(2.0 / (n + 1))
    return math.sqrt(4.0 * trig.kappa(j) / (n + 1))


def scaling_diagonal(n: int) -> np.ndarray:
    """
    Diagonal D commuting with W and carrying v to r.

    Even n: diag(r1, r1, r3, r3, ...). Odd n: diag(r1, r2, r2, r4, r4, ...).
    """
    trig = PathTrig(n)
    entries: list[float] = []
    if n % 2 == 0:
        for j in range(1, n, 2):
            entries += [_r_entry(trig, j)] * 2
    else:
        entries.append(_r_entry(trig, 1))
        for j in range(2, n, 2):
            entries += [_r_entry(trig, j)] * 2
    return np.diag(entries)


def generating_vector(n: int) -> np.ndarray:
    """r = D v, with ||r||^2 = path_norm(n)."""
    return scaling_diagonal(n) @ seed_vector(n)


def _rotate(n: int, j: int, vector: np.ndarray) -> np.ndarray:
    W = rotation_block(n)
    return np.linalg.matrix_power(W if j >= 0 else W.T, abs(j)) @ vector


def q_projection(n: int, j: int) -> np.ndarray:
    """Rank-one Q_j = q_j q_j^T with q_j = W^j v."""
    q = _rotate(n, j, seed_vector(n))
    return np.outer(q, q)


def p_projection(n: int, j: int) -> np.ndarray:
    """Rank-one P_j = p_j p_j^T with p_j = W^j r."""
    p = _rotate(n, j, generating_vector(n))
    return np.outer(p, p)


def extended_path_matrix(n: int) -> np.ndarray:
    """
    The (n+1) x (n+1) matrix b_ij.

    b_ij = 1 when j - i is 0 or 1, (-1)^(n+1) at (n+1, 1), else 0. For odd
    n it is the 0-1 matrix of the cycle Lambda(n+1).
    """
    Bt = np.zeros((n + 1, n + 1))
    for i in range(n + 1):
        Bt[i, i] = 1.0
        if i + 1 <= n:
            Bt[i, i + 1] = 1.0
    Bt[n, 0] = (-1.0) ** (n + 1)
    return Bt


@dataclass(frozen=True)
class PathWitness:
    """All matrices of the extremal construction for the path of parameter n."""

    n: int
    W: np.ndarray
    v: np.ndarray
    r: np.ndarray
    D: np.ndarray
    R: np.ndarray
    S: np.ndarray
    Rt: np.ndarray
    St: np.ndarray
    B: np.ndarray
    Bt: np.ndarray
    U: np.ndarray
    x: np.ndarray
    y: np.ndarray
    a: np.ndarray
    b: np.ndarray

    @property
    def value(self) -> float:
        return path_norm(self.n)

    @property
    def attained(self) -> float:
        """<(B o U^T) x, y>."""
        return float(self.y @ hadamard(self.B, self.U.T) @ self.x)

    def defects(self) -> dict[str, float]:
        """Absolute deviation of every invariant of the construction."""
        weighted_R = (self.R * self.a) @ self.R.T
        weighted_S = (self.S * self.b) @ self.S.T
        return {
            "W_orthogonal": orthogonality_defect(self.W),
            "U_orthogonal": orthogonality_defect(self.U),
            "StR_equals_B": float(np.max(np.abs(self.S.T @ self.R - self.B))),
            "extended_StR_equals_Bt": float(np.max(np.abs(self.St.T @ self.Rt - self.Bt))),
            "c_R": abs(col_bound(self.R) ** 2 - self.value),
            "c_S": abs(col_bound(self.S) ** 2 - self.value),
            "c_Rt": abs(col_bound(self.Rt) ** 2 - self.value),
            "c_St": abs(col_bound(self.St) ** 2 - self.value),
            "weights": float(np.max(np.abs(weighted_R - weighted_S))),
            "attainment": abs(self.attained - self.value),
        }

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"n": self.n, "value": self.value, "attained": self.attained}
        for key in ("W", "v", "r", "R", "S", "Rt", "St", "B", "Bt", "U", "x", "y", "a", "b"):
            data[key] = getattr(self, key).tolist()
        return data


def path_weights(n: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Convex weights balancing the two rank-one families.

    a_j = t_{j-1} / T on the columns of R and b_j = t_{n-j} / T on the
    columns of S, with T = sum_{k<n} t_k, so that
    sum a_j R_j R_j^T = sum b_j S_j S_j^T.
    """
    trig = PathTrig(n)
    t = np.array([trig.t(k) for k in range(n)])
    total = float(t.sum())
    a = t / total
    b = t[::-1] / total
    return a, b


def build_path_witness(n: int) -> PathWitness:
    """
    Construct the extremal factorization and witness for Sigma(n,n).

    Raises:
        InputError: n < 1
        NumericalError: R diag(sqrt a) is numerically singular
    """
    if n < 1:
        raise InputError(f"Path witness needs n >= 1, got {n}")

    W = rotation_block(n)
    v = seed_vector(n)
    D = scaling_diagonal(n)
    r = D @ v
    W2 = W @ W

    columns = [r]
    for _ in range(n):
        columns.append(W2 @ columns[-1])
    Rt = np.column_stack(columns)
    R = Rt[:, :n]
    S = W @ R
    St = W @ Rt
    Bt = extended_path_matrix(n)
    B = Bt[:n, :n]

    a, b = path_weights(n)
    x, y = np.sqrt(a), np.sqrt(b)
    RX = R * x
    SY = S * y

    condition = float(np.linalg.cond(RX))
    if not np.isfinite(condition) or condition > 1e12:
        raise NumericalError(f"R diag(sqrt a) is singular for n={n}", condition)
    # U maps S Y onto R X: R X U = S Y
    U = np.linalg.solve(RX, SY)

    drift = orthogonality_defect(U)
    if drift > ORTHOGONALITY_DRIFT:
        logger.debug(f"Path witness n={n}: re-orthogonalising U (drift {drift:.2e})")
        U = polar_orthogonal(U)

    return PathWitness(
        n=n, W=W, v=v, r=r, D=D, R=R, S=S, Rt=Rt, St=St, B=B, Bt=Bt,
        U=U, x=x, y=y, a=a, b=b,
    )
