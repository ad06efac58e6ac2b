"""
Classification Models

Labels and per-component detail produced by the gap-theorem classifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from src.models.graph import BiGraph
from src.models.norms import NormBounds


class NormClass(str, Enum):
    """Exact norm class eta_k, or the open tail at and above eta_6."""

    ETA_0 = "Eta(0)"
    ETA_1 = "Eta(1)"
    ETA_2 = "Eta(2)"
    ETA_3 = "Eta(3)"
    ETA_4 = "Eta(4)"
    ETA_5 = "Eta(5)"
    ETA_6 = "Eta(6)"
    AT_LEAST_ETA_6 = "AtLeastEta6"

    @classmethod
    def eta(cls, k: int) -> NormClass:
        return cls(f"Eta({k})")

    @property
    def k(self) -> int | None:
        """Index k of an exact class; None for the tail."""
        if self is NormClass.AT_LEAST_ETA_6:
            return None
        return int(self.value[4])

    @property
    def is_exact(self) -> bool:
        return self is not NormClass.AT_LEAST_ETA_6


@dataclass(frozen=True)
class ComponentMatch:
    """One connected component, its twin-free reduction and the least F_j containing it."""

    component: BiGraph
    reduced: BiGraph
    matched_j: int | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "component": self.component.to_json(),
            "reduced": self.reduced.to_json(),
            "matched_F": self.matched_j,
        }


@dataclass
class ClassResult:
    """Classification of a graph's Schur norm."""

    label: NormClass
    per_component: list[ComponentMatch] = field(default_factory=list)
    numeric: NormBounds | None = None

    @property
    def eta_value(self) -> float | None:
        """Closed-form norm for exact classes."""
        from src.exact.constants import ETA

        k = self.label.k
        return None if k is None else ETA[k]

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "label": self.label.value,
            "eta_value": self.eta_value,
            "components": [c.to_dict() for c in self.per_component],
        }
        if self.numeric is not None:
            data["numeric"] = self.numeric.to_dict()
        return data
