"""
Linear Algebra Module

Dense real matrix services used by every numerical routine.

Components:
    - svd / SvdResult: thin singular value decomposition
    - spectral_norm, trace_norm: operator and trace-class norms
    - hadamard: Schur (entrywise) product
    - col_bound: Haagerup column bound c(X)
    - polar_orthogonal: orthogonal polar factor
    - psd_rank_check, gram_factor, symmetric_sqrt: psd utilities
"""

from src.linalg.dense import (
    SvdResult,
    as_dense,
    col_bound,
    gram_factor,
    hadamard,
    numerical_rank,
    orthogonality_defect,
    pad_square,
    polar_orthogonal,
    psd_rank_check,
    spectral_norm,
    svd,
    symmetric_sqrt,
    trace_norm,
)

__all__ = [
    "SvdResult",
    "as_dense",
    "col_bound",
    "gram_factor",
    "hadamard",
    "numerical_rank",
    "orthogonality_defect",
    "pad_square",
    "polar_orthogonal",
    "psd_rank_check",
    "spectral_norm",
    "svd",
    "symmetric_sqrt",
    "trace_norm",
]
