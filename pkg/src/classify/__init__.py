"""
Classification Module

Exact norm classes of finite bipartite graphs.

Components:
    - classify: least-j matching of twin-free components against F_1..F_6
    - forbidden_structure_report: obstructions and degree-two identification
    - EnumerationSweep: exhaustive cross-check against the numerical estimator
"""

from src.classify.classifier import classify, least_class, match_components
from src.classify.enumeration import (
    ClassRecord,
    EnumerationSummary,
    EnumerationSweep,
    all_matrices,
    check_record,
)
from src.classify.obstructions import (
    TWIN_FAN,
    DegreeTwoShape,
    StructureReport,
    forbidden_structure_report,
    identify_degree_two,
)

__all__ = [
    # Classifier
    "classify",
    "least_class",
    "match_components",
    # Structures
    "TWIN_FAN",
    "DegreeTwoShape",
    "StructureReport",
    "forbidden_structure_report",
    "identify_degree_two",
    # Enumeration
    "ClassRecord",
    "EnumerationSummary",
    "EnumerationSweep",
    "all_matrices",
    "check_record",
]
