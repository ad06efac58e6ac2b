"""
Exact Norms Module

Closed-form Schur multiplier norms and the certificates that prove them.

Components:
    - constants: eta_0..eta_6 and the other exact values of the catalog
    - trig: angle helpers and the two trigonometric sum identities
    - paths: path / cycle norms and the extremal path construction
    - certificates: stored factorizations, witnesses and psd completions
    - verification: numerical re-checking of every certificate
"""

from src.exact.certificates import (
    bracket_ones_factors,
    certificate,
    certificate_names,
    eta4_completion_blocks,
    eta4_witness,
)
from src.exact.constants import (
    ETA,
    ETA_CLOSED_FORMS,
    GEE6_CYCLE_NORM,
    GEE7_NORM,
    OBSTRUCTION_53_LOWER,
    OBSTRUCTION_NORMS,
    PATH_LIMIT,
    TRIE_NORM,
    bracket_ones_norm,
)
from src.exact.paths import (
    PathWitness,
    build_path_witness,
    cycle_norm,
    path_norm,
    path_weights,
    popa_bounds,
)
from src.exact.trig import PathTrig, TrigForm, verify_altzero, verify_bigstar
from src.exact.verification import verify_all, verify_certificate

__all__ = [
    # Constants
    "ETA",
    "ETA_CLOSED_FORMS",
    "GEE6_CYCLE_NORM",
    "GEE7_NORM",
    "OBSTRUCTION_53_LOWER",
    "OBSTRUCTION_NORMS",
    "PATH_LIMIT",
    "TRIE_NORM",
    "bracket_ones_norm",
    # Paths
    "PathTrig",
    "PathWitness",
    "TrigForm",
    "build_path_witness",
    "cycle_norm",
    "path_norm",
    "path_weights",
    "popa_bounds",
    "verify_altzero",
    "verify_bigstar",
    # Certificates
    "bracket_ones_factors",
    "certificate",
    "certificate_names",
    "eta4_completion_blocks",
    "eta4_witness",
    "verify_all",
    "verify_certificate",
]
