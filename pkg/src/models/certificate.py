"""
Certificate Models

Stored proofs of exact norm values (explicit factorizations, orthogonal
witnesses, psd completions) and the reports produced when checking them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from src.models.graph import BiGraph, GraphName


class CertificateKind(str, Enum):
    """How a certificate pins down the norm."""

    FACTORIZATION_WITNESS = "Factorization+Witness"
    PSD_COMPLETION = "PsdCompletion"
    LOWER_ONLY = "LowerOnly"


@dataclass(frozen=True)
class NormCertificate:
    """
    Explicit matrices certifying a norm value.

    ``witness_bits`` is the induced subgraph on which ``U`` acts; it equals
    the graph itself unless the lower bound is inherited from a smaller
    graph. ``target`` is the strict lower threshold of obstruction
    certificates. ``printed_U`` keeps a published witness that is reported
    but not relied on.
    """

    name: GraphName
    graph: BiGraph
    exact_value: float | None
    kind: CertificateKind
    S: np.ndarray | None = None
    R: np.ndarray | None = None
    U: np.ndarray | None = None
    witness_bits: BiGraph | None = None
    P: np.ndarray | None = None
    Q: np.ndarray | None = None
    x: np.ndarray | None = None
    y: np.ndarray | None = None
    target: float | None = None
    target_label: str = ""
    closed_form: str = ""
    printed_U: np.ndarray | None = None

    @property
    def completion(self) -> np.ndarray | None:
        """The block matrix [[P, B], [B^T, Q]] for psd-completion certificates."""
        if self.P is None or self.Q is None:
            return None
        B = self.graph.as_dense()
        return np.block([[self.P, B], [B.T, self.Q]])

    def payload(self) -> dict[str, Any]:
        """Matrices as nested lists, for JSON output."""
        data: dict[str, Any] = {
            "name": self.name.label,
            "kind": self.kind.value,
            "exact_value": self.exact_value,
            "closed_form": self.closed_form,
            "graph": self.graph.to_json(),
        }
        for key in ("S", "R", "U", "P", "Q", "x", "y", "printed_U"):
            value = getattr(self, key)
            if value is not None:
                data[key] = np.asarray(value).tolist()
        if self.witness_bits is not None:
            data["witness_bits"] = self.witness_bits.to_json()
        if self.target is not None:
            data["target"] = self.target
            data["target_label"] = self.target_label
        return data


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check; informational entries never fail a report."""

    name: str
    passed: bool
    value: float | None = None
    expected: float | None = None
    detail: str = ""
    informational: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "passed": self.passed,
            "value": self.value,
            "expected": self.expected,
            "detail": self.detail,
            "informational": self.informational,
        }


@dataclass
class CertificateReport:
    """All checks run against one certificate."""

    name: str
    exact_value: float | None
    kind: CertificateKind
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed and not c.informational]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "exact_value": self.exact_value,
            "kind": self.kind.value,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
