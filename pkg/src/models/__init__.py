"""
Data Models Module

Value types shared across the package.

Models:
    - BiGraph, GraphName, GraphFamily: bipartite graphs and catalog names
    - Factorization, NormBounds: Haagerup certificates and norm intervals
    - NormClass, ComponentMatch, ClassResult: classifier output
    - NormCertificate, CertificateKind, CheckResult, CertificateReport: stored proofs
"""

from src.models.graph import BiGraph, GraphFamily, GraphName
from src.models.norms import Factorization, NormBounds
from src.models.classification import ClassResult, ComponentMatch, NormClass
from src.models.certificate import (
    CertificateKind,
    CertificateReport,
    CheckResult,
    NormCertificate,
)

__all__ = [
    "BiGraph",
    "GraphFamily",
    "GraphName",
    "Factorization",
    "NormBounds",
    "ClassResult",
    "ComponentMatch",
    "NormClass",
    "CertificateKind",
    "CertificateReport",
    "CheckResult",
    "NormCertificate",
]
