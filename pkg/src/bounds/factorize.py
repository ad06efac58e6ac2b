"""
Haagerup Factorizations

Upper bounds ||A||_Schur <= c(S) c(R) over factorizations A = S^T R.

The search works on the twin-reduced matrix (zero rows and columns dropped,
duplicates collapsed, oriented so m <= n). The core path is the alternating
sweep: with R fixed every column of S is replaced by the least-norm solution
of R^T s_i = a_i, then R likewise with S fixed, then both are rescaled so
c(S) = c(R). It starts from the caller's factorization or from S = I, R = A.

Refinement polishes the sweep result. Every factorization of rank k can be
moved by a gauge S -> L^{-1} S, R -> L^T R (L invertible, lower triangular)
without changing S^T R; the gauge minimising c(S)^2 subject to c(R) <= 1 is
found with SLSQP. Warm starts are the factorization recovered in closed form
from the dual witness (x, y) of the lower-bound ascent, the sweep result and
the balanced SVD. The factorization is lifted back to the original shape at
the end.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import scipy.linalg as sla
from loguru import logger
from scipy.optimize import minimize

from src.exceptions import InputError
from src.linalg import as_dense, col_bound, gram_factor, numerical_rank, svd, symmetric_sqrt
from src.models.norms import Factorization

RESIDUAL_TOL = 1e-10
WEIGHT_FLOOR = 1e-14


@dataclass
class UpperBoundResult:
    """Best factorization found and the non-increasing sequence of accepted products."""

    factorization: Factorization
    upper: float
    sweeps: int
    history: list[float] = field(default_factory=list, repr=False)

    def __iter__(self) -> Iterator[Any]:
        """Unpack as (factorization, upper)."""
        return iter((self.factorization, self.upper))


@dataclass
class _Reduction:
    """Map from the original matrix to its twin-free, oriented core."""

    core: np.ndarray
    row_map: np.ndarray  # original row -> core row (or -1 for zero rows)
    col_map: np.ndarray
    transposed: bool


def _collapse(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Drop zero rows and merge equal rows; returns (kept rows, map old -> new)."""
    mapping = np.full(arr.shape[0], -1, dtype=int)
    index: dict[bytes, int] = {}
    kept: list[np.ndarray] = []
    for i, row in enumerate(arr):
        if not np.any(row):
            continue
        key = (row + 0.0).tobytes()
        if key not in index:
            index[key] = len(kept)
            kept.append(row)
        mapping[i] = index[key]
    core = np.array(kept).reshape(len(kept), arr.shape[1])
    return core, mapping


def _compose(mapping: np.ndarray, step: np.ndarray) -> np.ndarray:
    """Follow ``mapping`` through one more collapse; -1 stays -1."""
    out = np.full_like(mapping, -1)
    alive = mapping >= 0
    out[alive] = step[mapping[alive]]
    return out


def _reduce(A: np.ndarray) -> _Reduction:
    core = A.copy()
    row_map = np.arange(A.shape[0])
    col_map = np.arange(A.shape[1])
    while True:
        shape = core.shape
        core, rows = _collapse(core)
        row_map = _compose(row_map, rows)
        core_t, cols = _collapse(core.T)
        core = core_t.T
        col_map = _compose(col_map, cols)
        if core.shape == shape:
            break
    transposed = core.shape[0] > core.shape[1]
    return _Reduction(core.T.copy() if transposed else core, row_map, col_map, transposed)


def _lift(S: np.ndarray, R: np.ndarray, reduction: _Reduction, A: np.ndarray) -> Factorization:
    """Expand a factorization of the core back to the original rows and columns."""
    if reduction.transposed:
        S, R = R, S
    k = S.shape[0]
    S_full = np.zeros((k, A.shape[0]))
    R_full = np.zeros((k, A.shape[1]))
    for i, target in enumerate(reduction.row_map):
        if target >= 0:
            S_full[:, i] = S[:, target]
    for j, target in enumerate(reduction.col_map):
        if target >= 0:
            R_full[:, j] = R[:, target]
    return Factorization(S_full, R_full, A)


def _least_norm(S: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Minimum-norm R with S^T R = A (least squares when inconsistent)."""
    return np.linalg.lstsq(S.T, A, rcond=None)[0]


def _residual(S: np.ndarray, R: np.ndarray, A: np.ndarray) -> float:
    if A.size == 0:
        return 0.0
    return float(np.max(np.abs(S.T @ R - A))) / max(1.0, float(np.max(np.abs(A))))


def _product(S: np.ndarray, R: np.ndarray) -> float:
    return col_bound(S) * col_bound(R)


def _balance(S: np.ndarray, R: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    c_s, c_r = col_bound(S), col_bound(R)
    if c_s == 0.0 or c_r == 0.0:
        return S, R
    scale = np.sqrt(c_r / c_s)
    return S * scale, R / scale


def alternating_sweep(
    S: np.ndarray,
    R: np.ndarray,
    A: np.ndarray,
    max_iters: int = 500,
    tol: float = 1e-12,
) -> UpperBoundResult:
    """
    Alternating minimum-norm updates of a factorization A = S^T R.

    Each sweep solves R^T s_i = (row i of A) for every column of S in the
    least-norm sense, then S^T r_j = (column j of A) for every column of R,
    and rescales both to equal column bounds. The current factors solve the
    same systems, so c(S) c(R) never increases; a sweep that would raise it
    or break S^T R = A is rejected and ends the search.

    Args:
        S: k x m starting factor
        R: k x n starting factor with S^T R = A
        A: m x n target
        max_iters: Sweep cap
        tol: Stop once a sweep improves the product by less than this

    Returns:
        UpperBoundResult holding the last accepted factorization
    """
    arr = as_dense(A)
    S, R = _balance(np.asarray(S, dtype=float), np.asarray(R, dtype=float))
    if _residual(S, R, arr) > RESIDUAL_TOL:
        raise InputError("Starting factors do not satisfy S^T R = A")
    history = [_product(S, R)]

    sweeps = 0
    for sweeps in range(1, max_iters + 1):
        S_new = np.linalg.lstsq(R.T, arr.T, rcond=None)[0]
        R_new = _least_norm(S_new, arr)
        if _residual(S_new, R_new, arr) > RESIDUAL_TOL:
            logger.debug(f"Sweep {sweeps} lost S^T R = A; keeping the previous factors")
            break
        S_new, R_new = _balance(S_new, R_new)
        value = _product(S_new, R_new)
        if value > history[-1]:
            break
        gain = history[-1] - value
        S, R = S_new, R_new
        history.append(value)
        if gain < tol:
            break

    return UpperBoundResult(Factorization(S, R, arr), history[-1], sweeps, history)


# ----------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------


def _svd_base(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Balanced SVD factors at the numerical rank: S = sqrt(Sigma) U^T, R = sqrt(Sigma) V^T."""
    decomposition = svd(A)
    r = numerical_rank(A)
    root = np.sqrt(decomposition.values[:r])
    S = root[:, None] * decomposition.left[:, :r].T
    R = root[:, None] * decomposition.right[:, :r].T
    return S, R


def factorization_from_witness(A: np.ndarray, x: np.ndarray, y: np.ndarray) -> Factorization | None:
    """
    Closed-form factorization built from dual weights.

    With w = x^2 on the columns and l = y^2 on the rows, the Gram matrix
    N = L^{-1/2} (L^{1/2} A diag(w) A^T L^{1/2})^{1/2} L^{-1/2} (L = diag(l))
    is the S^T S of the factorization that satisfies complementary
    slackness against (x, y). R is the least-norm solution of S^T R = A.
    Returns None when the system turns out inconsistent.
    """
    arr = as_dense(A)
    m, n = arr.shape
    if x.shape != (n,) or y.shape != (m,):
        raise InputError(f"Witness vectors must have lengths {n} and {m}")
    if m == 0 or n == 0 or not np.any(arr):
        return None

    w = x**2
    lam = y**2
    lam = np.maximum(lam, WEIGHT_FLOOR * max(float(lam.max()), WEIGHT_FLOOR))
    root = np.sqrt(lam)
    K = (arr * w) @ arr.T
    N = symmetric_sqrt(root[:, None] * K * root[None, :]) / np.outer(root, root)

    best: Factorization | None = None
    S = gram_factor(N)
    if S.shape[0] == 0:
        return None
    norms = np.linalg.norm(S, axis=0)
    equalised = S * (norms.max() / np.where(norms > 0, norms, norms.max()))
    for candidate in (S, equalised):
        R = _least_norm(candidate, arr)
        if _residual(candidate, R, arr) > RESIDUAL_TOL:
            continue
        F = Factorization(candidate, R, arr)
        if best is None or F.product < best.product:
            best = F
    return best


def compress_factorization(F: Factorization) -> Factorization:
    """
    Reduce the inner dimension to at most min(m, n) without increasing c(S) c(R).

    The factor on the short side is replaced by its triangular QR factor and
    the other factor is projected onto the same subspace.
    """
    m, n = F.S.shape[1], F.R.shape[1]
    if F.k <= min(m, n):
        return F
    if m <= n:
        Q, T = np.linalg.qr(F.S, mode="reduced")
        return Factorization(T, Q.T @ F.R, F.target)
    Q, T = np.linalg.qr(F.R, mode="reduced")
    return Factorization(Q.T @ F.S, T, F.target)


def factorization_from_completion(C: np.ndarray, m: int) -> Factorization:
    """
    Factorization read off a psd completion [[P, A], [A^T, Q]].

    With C = G^T G, S is the first m columns of G and R the rest, so
    c(S)^2 <= max diag P and c(R)^2 <= max diag Q.
    """
    arr = as_dense(C)
    if arr.shape[0] != arr.shape[1] or not 0 <= m <= arr.shape[0]:
        raise InputError(f"Completion must be square with m <= size, got {arr.shape}, m={m}")
    G = gram_factor(arr)
    F = Factorization(G[:, :m], G[:, m:], arr[:m, m:])
    return compress_factorization(F)


# ----------------------------------------------------------------------
# Gauge refinement
# ----------------------------------------------------------------------


class _GaugeProblem:
    """min t s.t. ||L^{-1} s_i||^2 <= t and ||L^T r_j||^2 <= 1, L lower triangular."""

    def __init__(self, S0: np.ndarray, R0: np.ndarray) -> None:
        self.S0 = S0
        self.R0 = R0
        self.k = S0.shape[0]
        self.rows, self.cols = np.tril_indices(self.k)

    def unpack(self, z: np.ndarray) -> np.ndarray:
        L = np.zeros((self.k, self.k))
        L[self.rows, self.cols] = z[:-1]
        return L

    def pack(self, L: np.ndarray, t: float) -> np.ndarray:
        return np.append(L[self.rows, self.cols], t)

    def factors(self, L: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        S = sla.solve_triangular(L, self.S0, lower=True)
        return S, L.T @ self.R0

    def constraints(self, z: np.ndarray) -> np.ndarray:
        L = self.unpack(z)
        try:
            Z, U = self.factors(L)
        except (np.linalg.LinAlgError, ValueError):
            return np.full(self.S0.shape[1] + self.R0.shape[1], -1e6)
        return np.concatenate([z[-1] - np.sum(Z**2, axis=0), 1.0 - np.sum(U**2, axis=0)])

    def jacobian(self, z: np.ndarray) -> np.ndarray:
        L = self.unpack(z)
        m, n = self.S0.shape[1], self.R0.shape[1]
        jac = np.zeros((m + n, z.size))
        try:
            Z, U = self.factors(L)
            Wm = sla.solve_triangular(L, Z, lower=True, trans="T")
        except (np.linalg.LinAlgError, ValueError):
            return jac
        jac[:m, :-1] = 2.0 * (Wm[self.rows, :] * Z[self.cols, :]).T
        jac[:m, -1] = 1.0
        jac[m:, :-1] = -2.0 * (self.R0[self.rows, :] * U[self.cols, :]).T
        return jac

    def solve(self, L0: np.ndarray, t0: float, max_iter: int) -> np.ndarray | None:
        result = minimize(
            lambda z: z[-1],
            self.pack(L0, t0),
            jac=lambda z: np.eye(1, z.size, z.size - 1).ravel(),
            method="SLSQP",
            constraints=[{"type": "ineq", "fun": self.constraints, "jac": self.jacobian}],
            options={"maxiter": max_iter, "ftol": 1e-16},
        )
        if not np.all(np.isfinite(result.x)):
            return None
        return self.unpack(result.x)


def _refine_base(
    S0: np.ndarray,
    R0: np.ndarray,
    A: np.ndarray,
    sweeps: int,
    slsqp_iters: int,
    target: float,
    history: list[float],
    best: tuple[np.ndarray, np.ndarray] | None,
) -> tuple[tuple[np.ndarray, np.ndarray] | None, int]:
    """Accept-if-better SLSQP sweeps on one base. Returns the best pair and sweeps used."""
    problem = _GaugeProblem(S0, R0)
    scale = col_bound(R0)
    if scale == 0.0:
        return best, 0
    L = np.eye(problem.k) / scale
    best_value = history[-1] if history else np.inf

    S, R = problem.factors(L)
    value = _product(S, R)
    if value < best_value and _residual(S, R, A) <= RESIDUAL_TOL:
        best, best_value = (S, R), value
        history.append(value)

    used = 0
    for used in range(1, sweeps + 1):
        if best_value <= target:
            break
        t0 = col_bound(problem.factors(L)[0]) ** 2
        L_new = problem.solve(L, t0, slsqp_iters)
        if L_new is None or np.min(np.abs(np.diag(L_new))) == 0.0:
            break
        try:
            S, _ = problem.factors(L_new)
        except (np.linalg.LinAlgError, ValueError):
            break
        R = _least_norm(S, A)
        value = _product(S, R)
        improved = value < best_value and _residual(S, R, A) <= RESIDUAL_TOL
        if not improved:
            break
        gain = best_value - value
        best, best_value, L = (S, R), value, L_new
        history.append(value)
        logger.debug(f"Gauge sweep {used}: product={value:.12f}")
        if gain < 1e-15 * max(1.0, value):
            break
    return best, used


def upper_bound_factorize(
    A: np.ndarray,
    init: Factorization | None = None,
    max_iters: int = 500,
    tol: float = 1e-12,
    *,
    witness: tuple[np.ndarray, np.ndarray] | None = None,
    target: float = 0.0,
    refine: bool = True,
    refine_sweeps: int = 12,
    slsqp_iters: int = 200,
) -> UpperBoundResult:
    """
    Search for a factorization A = S^T R with small c(S) c(R).

    Args:
        A: m x n real matrix
        init: Optional factorization to start the alternating sweep from;
            defaults to S = I, R = A on the reduced core
        max_iters: Alternating sweep cap
        tol: Sweeps stop once they improve the product by less than this;
            refinement stops once the product is within tol of ``target``
        witness: Dual weights (x over columns, y over rows) from the ascent
        target: Known lower bound; refinement stops as soon as it is met
        refine: Polish the sweep result with SLSQP gauge refinement
        refine_sweeps: SLSQP sweeps per warm start
        slsqp_iters: Iteration cap of each SLSQP call

    Returns:
        UpperBoundResult; the factorization satisfies S^T R = A to 1e-9 and
        has inner dimension at most min(m, n)
    """
    arr = as_dense(A)
    m, n = arr.shape
    reduction = _reduce(arr)
    core = reduction.core
    if core.size == 0:
        zero = Factorization(np.zeros((0, m)), np.zeros((0, n)), arr)
        return UpperBoundResult(zero, 0.0, 0, [0.0])

    S0, R0 = np.eye(core.shape[0]), core.copy()
    if init is not None:
        compressed = compress_factorization(init)
        if compressed.residual() <= RESIDUAL_TOL * max(1.0, float(np.max(np.abs(arr)))):
            S0, R0 = _restrict(compressed, reduction)
        else:
            logger.debug("Initial factorization does not reproduce A; starting from S = I")

    swept = alternating_sweep(S0, R0, core, max_iters, tol)
    history = list(swept.history)
    best = (swept.factorization.S, swept.factorization.R)
    total = swept.sweeps
    goal = target + tol

    if refine and history[-1] > goal:
        starts: list[tuple[str, np.ndarray, np.ndarray]] = []
        if witness is not None:
            x_core, y_core = _core_weights(reduction, *witness)
            from_witness = factorization_from_witness(core, x_core, y_core)
            if from_witness is not None:
                starts.append(("witness", from_witness.S, from_witness.R))
        starts.append(("sweep", *best))
        starts.append(("svd", *_svd_base(core)))

        for label, S_start, R_start in starts:
            refined, used = _refine_base(
                S_start, R_start, core, refine_sweeps, slsqp_iters, goal, history, best
            )
            assert refined is not None
            best = refined
            total += used
            logger.debug(f"Warm start {label}: best product {history[-1]:.12f}")
            if history[-1] <= goal:
                break

        polished = alternating_sweep(best[0], best[1], core, max_iters, tol)
        if polished.upper < history[-1]:
            best = (polished.factorization.S, polished.factorization.R)
            history.append(polished.upper)
            total += polished.sweeps

    F = _lift(best[0], best[1], reduction, arr).balanced()
    return UpperBoundResult(F, F.product, total, history)


def _core_weights(
    reduction: _Reduction, x: np.ndarray, y: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Push unit weight vectors onto the core, summing squares over merged twins."""
    rows = int(reduction.row_map.max()) + 1
    cols = int(reduction.col_map.max()) + 1
    row_w = np.zeros(rows)
    col_w = np.zeros(cols)
    for i, target in enumerate(reduction.row_map):
        if target >= 0:
            row_w[target] += y[i] ** 2
    for j, target in enumerate(reduction.col_map):
        if target >= 0:
            col_w[target] += x[j] ** 2
    x_core, y_core = np.sqrt(col_w), np.sqrt(row_w)
    if reduction.transposed:
        x_core, y_core = y_core, x_core
    return x_core, y_core


def _restrict(F: Factorization, reduction: _Reduction) -> tuple[np.ndarray, np.ndarray]:
    """Columns of a full factorization that represent the core rows and columns."""
    rows = int(reduction.row_map.max()) + 1
    cols = int(reduction.col_map.max()) + 1
    S = np.zeros((F.k, rows))
    R = np.zeros((F.k, cols))
    for i, target in enumerate(reduction.row_map):
        if target >= 0:
            S[:, target] = F.S[:, i]
    for j, target in enumerate(reduction.col_map):
        if target >= 0:
            R[:, target] = F.R[:, j]
    if reduction.transposed:
        S, R = R, S
    return S, R
