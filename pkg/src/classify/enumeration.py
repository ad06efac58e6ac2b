"""
Exhaustive Enumeration

Sweeps every 0-1 matrix up to a given size, deduplicated by isomorphism,
and cross-checks the classifier against the numerical estimator:

- oracle agreement: Eta(k) labels bracket eta_k, AtLeastEta6 labels sit
  above eta_6
- gap emptiness: no tight interval lies strictly inside a gap
- degree two: twin-free connected graphs with norms strictly between 1 and
  eta_4 have maximum degree two
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from diskcache import Cache
from loguru import logger

from src.bounds.estimator import NormEstimator
from src.classify.classifier import classify
from src.config import BoundsSettings
from src.exact.constants import ETA
from src.graphs.reduction import is_connected, is_twin_free, max_degree
from src.graphs.search import canonical_key
from src.models.classification import NormClass
from src.models.graph import BiGraph

ORACLE_TOL = 1e-5
GAP_MARGIN = 1e-4
TIGHT_WIDTH = 1e-6


@dataclass
class ClassRecord:
    """One isomorphism class with its label and numerical bounds."""

    key: str
    rows: list[str]
    m: int
    n: int
    multiplicity: int
    label: str
    lower: float
    upper: float
    converged: bool
    max_degree: int
    twin_free: bool
    connected: bool

    @property
    def graph(self) -> BiGraph:
        return BiGraph.from_bits(self.m, self.n, self.rows)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)


@dataclass
class EnumerationSummary:
    """Outcome of a sweep."""

    max_m: int
    max_n: int
    matrices: int
    records: list[ClassRecord] = field(default_factory=list)
    oracle_failures: list[str] = field(default_factory=list)
    gap_violations: list[str] = field(default_factory=list)
    degree_two_failures: list[str] = field(default_factory=list)
    cache_hits: int = 0
    checked: bool = True

    @property
    def passed(self) -> bool:
        return not (self.oracle_failures or self.gap_violations or self.degree_two_failures)

    def histogram(self, weighted: bool = True) -> dict[str, int]:
        """Label counts over matrices (weighted) or over isomorphism classes."""
        counts: Counter[str] = Counter()
        for record in self.records:
            counts[record.label] += record.multiplicity if weighted else 1
        order = [label.value for label in NormClass]
        return {label: counts[label] for label in order if counts[label]}

    @property
    def realized_labels(self) -> list[str]:
        return list(self.histogram(weighted=False))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(r) for r in self.records])

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_m": self.max_m,
            "max_n": self.max_n,
            "matrices": self.matrices,
            "classes": len(self.records),
            "histogram": self.histogram(),
            "class_histogram": self.histogram(weighted=False),
            "oracle_failures": self.oracle_failures,
            "gap_violations": self.gap_violations,
            "degree_two_failures": self.degree_two_failures,
            "checked": self.checked,
            "passed": self.passed,
        }


def all_matrices(m: int, n: int) -> Iterator[np.ndarray]:
    """Every m x n 0-1 matrix, in binary counting order."""
    size = m * n
    for code in range(1 << size):
        bits = (code >> np.arange(size)) & 1
        yield bits.reshape(m, n).astype(np.uint8)


def _key_text(key: tuple[int, int, tuple[int, ...]]) -> str:
    m, n, rows = key
    return f"{m}x{n}:" + ",".join(str(r) for r in rows)


def _evaluate(args: tuple[int, int, list[str], int, str, dict[str, Any]]) -> ClassRecord:
    """Classify and bound one representative (runs in worker processes)."""
    m, n, rows, multiplicity, key, settings = args
    G = BiGraph.from_bits(m, n, rows)
    estimator = NormEstimator(BoundsSettings.model_validate(settings))
    result = classify(G, estimator)
    bounds = estimator.estimate(G.as_dense())
    return ClassRecord(
        key=key,
        rows=rows,
        m=m,
        n=n,
        multiplicity=multiplicity,
        label=result.label.value,
        lower=bounds.lower,
        upper=bounds.upper,
        converged=bounds.converged,
        max_degree=max_degree(G),
        twin_free=is_twin_free(G),
        connected=is_connected(G),
    )


def check_record(record: ClassRecord) -> tuple[str | None, str | None, str | None]:
    """(oracle failure, gap violation, degree-two failure) messages for one class."""
    label = NormClass(record.label)
    where = f"{record.key} ({'/'.join(record.rows)})"

    oracle = None
    if label.is_exact:
        eta = ETA[label.k or 0]
        if record.lower < eta - ORACLE_TOL or record.upper > eta + ORACLE_TOL:
            oracle = f"{where}: {label.value} but bounds [{record.lower:.8f}, {record.upper:.8f}]"
    elif record.lower < ETA[6] - ORACLE_TOL:
        oracle = f"{where}: AtLeastEta6 but lower {record.lower:.8f}"

    gap = None
    if record.converged and record.upper - record.lower < TIGHT_WIDTH:
        for j in range(1, len(ETA)):
            if record.lower > ETA[j - 1] + GAP_MARGIN and record.upper < ETA[j] - GAP_MARGIN:
                gap = f"{where}: interval inside gap ({ETA[j - 1]:.6f}, {ETA[j]:.6f})"

    degree = None
    if record.twin_free and record.connected and 1.0 + GAP_MARGIN < record.midpoint < ETA[4] - GAP_MARGIN:
        if record.max_degree != 2:
            degree = f"{where}: norm {record.midpoint:.6f} with max degree {record.max_degree}"
    return oracle, gap, degree


class EnumerationSweep:
    """
    Exhaustive sweep over all 0-1 matrices with 1 <= m <= max_m, 1 <= n <= max_n.

    Isomorphic matrices (including transposes) are evaluated once. Results
    can be cached on disk per class, keyed by the canonical key and the
    solver settings.
    """

    CACHE_PREFIX = "class:"
    check_record = staticmethod(check_record)

    def __init__(
        self,
        max_m: int = 4,
        max_n: int = 4,
        settings: BoundsSettings | None = None,
        workers: int | None = None,
        cache_dir: str | Path | None = None,
    ) -> None:
        self.max_m = max_m
        self.max_n = max_n
        self.settings = settings or BoundsSettings()
        self.workers = workers
        self.cache = Cache(str(cache_dir)) if cache_dir is not None else None

    def classes(self) -> tuple[dict[str, tuple[BiGraph, int]], int]:
        """Representatives and multiplicities of all isomorphism classes, plus the matrix count."""
        classes: dict[str, tuple[BiGraph, int]] = {}
        total = 0
        for m in range(1, self.max_m + 1):
            for n in range(1, self.max_n + 1):
                for bits in all_matrices(m, n):
                    total += 1
                    G = BiGraph(bits)
                    key = _key_text(canonical_key(G))
                    if key in classes:
                        rep, count = classes[key]
                        classes[key] = (rep, count + 1)
                    else:
                        classes[key] = (G, 1)
        logger.info(f"Enumerated {total} matrices in {len(classes)} isomorphism classes")
        return classes, total

    def _cache_key(self, key: str) -> str:
        return f"{self.CACHE_PREFIX}{key}:{self.settings.model_dump_json()}"

    def run(self, check: bool = True) -> EnumerationSummary:
        """Evaluate every class; with ``check`` also run the three cross-checks."""
        classes, total = self.classes()
        summary = EnumerationSummary(self.max_m, self.max_n, total, checked=check)
        settings = self.settings.model_dump()

        pending = []
        for key, (G, count) in classes.items():
            cached = self.cache.get(self._cache_key(key)) if self.cache is not None else None
            if cached is not None:
                record = ClassRecord(**cached)
                record.multiplicity = count
                summary.records.append(record)
                summary.cache_hits += 1
                continue
            rows = G.to_json()["rows"]
            pending.append((G.m, G.n, rows, count, key, settings))

        if self.workers and self.workers > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                fresh = list(pool.map(_evaluate, pending, chunksize=8))
        else:
            fresh = [_evaluate(args) for args in pending]

        for record in fresh:
            if self.cache is not None:
                self.cache.set(self._cache_key(record.key), asdict(record))
        summary.records.extend(fresh)
        summary.records.sort(key=lambda r: (r.m, r.n, r.key))

        if not check:
            logger.info(f"Sweep up to {self.max_m}x{self.max_n}: {len(summary.records)} classes")
            return summary

        for record in summary.records:
            oracle, gap, degree = self.check_record(record)
            if oracle:
                summary.oracle_failures.append(oracle)
            if gap:
                summary.gap_violations.append(gap)
            if degree:
                summary.degree_two_failures.append(degree)

        if summary.passed:
            logger.info(f"Sweep up to {self.max_m}x{self.max_n}: all checks passed")
        else:
            logger.warning(
                f"Sweep up to {self.max_m}x{self.max_n}: {len(summary.oracle_failures)} oracle, "
                f"{len(summary.gap_violations)} gap, {len(summary.degree_two_failures)} degree failures"
            )
        return summary
