"""
Certificate Verification

Re-checks every stored certificate numerically. Failed checks are report
entries, never exceptions.
"""

from __future__ import annotations

import numpy as np
from loguru import logger

from src.bounds.factorize import factorization_from_completion
from src.exact.certificates import certificate, certificate_names
from src.exact.constants import OBSTRUCTION_53_LOWER
from src.graphs.search import is_induced_subgraph
from src.linalg import (
    col_bound,
    hadamard,
    orthogonality_defect,
    psd_rank_check,
    spectral_norm,
    trace_norm,
)
from src.models.certificate import CertificateKind, CertificateReport, CheckResult, NormCertificate
from src.models.graph import GraphFamily

COMPLETION_RANK = 3


def _format_polynomial(coefficients: np.ndarray) -> str:
    """Monic integer-rounded polynomial in x, highest degree first."""
    degree = len(coefficients) - 1
    terms: list[str] = []
    for power, raw in enumerate(coefficients):
        value = int(round(float(raw)))
        if value == 0:
            continue
        exponent = degree - power
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        coefficient = "" if magnitude == 1 and exponent else str(magnitude)
        variable = "" if exponent == 0 else ("x" if exponent == 1 else f"x^{exponent}")
        terms.append(f"{sign}{coefficient}{variable}")
    text = "".join(terms).lstrip("+")
    return text or "0"


def _factorization_checks(cert: NormCertificate, tol: float) -> list[CheckResult]:
    assert cert.S is not None and cert.R is not None
    B = cert.graph.as_dense()
    checks: list[CheckResult] = []
    if cert.S.T.shape[0] != B.shape[0] or cert.R.shape[1] != B.shape[1]:
        checks.append(CheckResult("StR_equals_bits", False, detail="factor shapes do not match the graph"))
        return checks

    residual = float(np.max(np.abs(cert.S.T @ cert.R - B))) if B.size else 0.0
    checks.append(CheckResult("StR_equals_bits", residual <= tol, residual, 0.0))
    if cert.exact_value is not None:
        product = col_bound(cert.S) * col_bound(cert.R)
        checks.append(
            CheckResult(
                "product_equals_exact",
                abs(product - cert.exact_value) <= tol,
                product,
                cert.exact_value,
            )
        )
    return checks


def _witness_checks(cert: NormCertificate, tol: float) -> list[CheckResult]:
    assert cert.U is not None
    witness = cert.witness_bits if cert.witness_bits is not None else cert.graph
    checks: list[CheckResult] = []

    defect = orthogonality_defect(cert.U)
    checks.append(CheckResult("U_orthogonal", defect <= tol, defect, 0.0))
    induced = is_induced_subgraph(witness, cert.graph)
    checks.append(
        CheckResult(
            "witness_induced",
            induced,
            detail=f"{witness.m}x{witness.n} witness graph in {cert.graph.m}x{cert.graph.n}",
        )
    )
    if cert.U.shape != witness.shape:
        checks.append(CheckResult("lower_attained", False, detail="U shape does not match witness"))
        return checks

    value = spectral_norm(hadamard(witness.as_dense(), cert.U))
    if cert.exact_value is not None:
        checks.append(
            CheckResult(
                "lower_attained",
                abs(value - cert.exact_value) <= tol,
                value,
                cert.exact_value,
            )
        )
    if cert.target is not None:
        checks.append(
            CheckResult(
                "lower_exceeds_target",
                value > cert.target,
                value,
                cert.target,
                detail=cert.target_label,
            )
        )
    return checks


def _completion_checks(cert: NormCertificate, tol: float) -> list[CheckResult]:
    C = cert.completion
    assert C is not None and cert.P is not None and cert.Q is not None
    checks: list[CheckResult] = []
    m = cert.graph.m

    low_rank = psd_rank_check(C, COMPLETION_RANK, tol)
    eigenvalues = np.linalg.eigvalsh(C)
    checks.append(
        CheckResult(
            "completion_psd_rank3",
            low_rank,
            float(eigenvalues[0]),
            0.0,
            detail=f"{int(np.sum(eigenvalues > tol * max(1.0, eigenvalues[-1])))} significant eigenvalues",
        )
    )
    top = float(np.max(np.diag(C)))
    if cert.exact_value is not None:
        checks.append(
            CheckResult("completion_max_diagonal", abs(top - cert.exact_value) <= tol, top, cert.exact_value)
        )
        F = factorization_from_completion(C, m)
        residual = F.residual()
        sound = residual <= tol and F.product <= cert.exact_value + tol
        checks.append(
            CheckResult(
                "completion_factorization",
                sound,
                F.product,
                cert.exact_value,
                detail=f"k={F.k}, residual={residual:.2e}",
            )
        )
    return checks


def _trace_checks(cert: NormCertificate) -> list[CheckResult]:
    """Rank-one dual bound ||B^T o (x y^T)||_1 for the stored unit vectors, x on the rows."""
    assert cert.x is not None and cert.y is not None
    B = cert.graph.as_dense()
    x, y = cert.x / np.linalg.norm(cert.x), cert.y / np.linalg.norm(cert.y)
    if (x.size, y.size) != (B.shape[1], B.shape[0]):
        return [CheckResult("trace_lower_exceeds_target", False, detail="x, y do not fit B^T")]
    value = trace_norm(hadamard(B.T, np.outer(x, y)))
    return [
        CheckResult(
            "trace_lower_exceeds_target",
            cert.target is not None and value > cert.target,
            value,
            cert.target,
            detail=cert.target_label,
        )
    ]


def _printed_witness_checks(cert: NormCertificate) -> list[CheckResult]:
    """Informational: what the published witness actually gives."""
    assert cert.printed_U is not None
    M = hadamard(cert.graph.as_dense(), cert.printed_U)
    value = spectral_norm(M)
    Z = 16.0 * M.T @ M - 9.0 * np.eye(M.shape[1])
    polynomial = _format_polynomial(np.poly(Z))
    return [
        CheckResult(
            "printed_witness_orthogonal",
            orthogonality_defect(cert.printed_U) <= 1e-9,
            orthogonality_defect(cert.printed_U),
            0.0,
            informational=True,
        ),
        CheckResult(
            "printed_witness_value",
            cert.target is not None and value > cert.target,
            value,
            cert.target,
            detail=f"char poly of 16(BoU)^T(BoU) - 9I: {polynomial}",
            informational=True,
        ),
    ]


def verify_certificate(cert: NormCertificate, tol: float = 1e-9) -> CertificateReport:
    """
    Run every check that applies to a certificate.

    Args:
        cert: Certificate to check
        tol: Absolute tolerance for equalities

    Returns:
        CertificateReport; ``passed`` ignores informational entries
    """
    report = CertificateReport(cert.name.label, cert.exact_value, cert.kind)

    if cert.S is not None and cert.R is not None:
        report.checks += _factorization_checks(cert, tol)
    if cert.U is not None:
        report.checks += _witness_checks(cert, tol)
    if cert.kind == CertificateKind.PSD_COMPLETION:
        report.checks += _completion_checks(cert, tol)
    if cert.x is not None and cert.y is not None:
        report.checks += _trace_checks(cert)
    if cert.printed_U is not None:
        report.checks += _printed_witness_checks(cert)

    if cert.name.tag == GraphFamily.OBSTRUCTION and cert.name.params == (53,) and cert.U is not None:
        value = spectral_norm(hadamard(cert.graph.as_dense(), cert.U))
        report.checks.append(
            CheckResult(
                "closed_form_lower",
                abs(value - OBSTRUCTION_53_LOWER) <= tol,
                value,
                OBSTRUCTION_53_LOWER,
                detail="sqrt((61+sqrt(2821))/2)/6",
            )
        )

    if not report.checks:
        report.checks.append(CheckResult("has_payload", False, detail="certificate carries no matrices"))

    if report.passed:
        logger.debug(f"Certificate {report.name}: {len(report.checks)} checks passed")
    else:
        names = ", ".join(c.name for c in report.failures)
        logger.warning(f"Certificate {report.name} failed: {names}")
    return report


def verify_all(tol: float = 1e-9, bracket_ones_max_n: int = 6) -> list[CertificateReport]:
    """Verify the whole certificate suite."""
    return [verify_certificate(certificate(name), tol) for name in certificate_names(bracket_ones_max_n)]
