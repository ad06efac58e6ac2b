"""
CLI Commands

One function per subcommand. Each takes the parsed arguments and the
solver settings and returns a CommandResult holding the JSON results, the
rendered text and the pass/fail outcome.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Any

import pandas as pd
from loguru import logger

from simulation.checks import GrowthReport, sign_average_bound_check, sign_matrix_survey
from simulation.engine import expected_norm
from simulation.models import RandomModel
from src.bounds.estimator import NormEstimator
from src.classify.classifier import classify
from src.classify.enumeration import EnumerationSweep
from src.classify.obstructions import forbidden_structure_report
from src.config import Settings
from src.exact.certificates import certificate
from src.exact.constants import (
    ETA,
    ETA_CLOSED_FORMS,
    GEE6_CYCLE_NORM,
    GEE7_NORM,
    OBSTRUCTION_NORMS,
    PATH_LIMIT,
    TRIE_NORM,
)
from src.exact.paths import build_path_witness, path_norm, popa_bounds
from src.exact.verification import verify_all, verify_certificate
from src.exceptions import InputError
from src.graphs.catalog import OBSTRUCTIONS, catalog, fixed_names, parse_graph_name, sigma
from src.models.graph import BiGraph, GraphFamily, GraphName

# Remark values are quoted to five decimals
REMARK_TOL = 5e-6
# Numeric midpoints must match closed forms this closely in the table
TABLE_TOL = 1e-5
# Paths above this size get no numeric bounds in the paths table
PATHS_NUMERIC_MAX_N = 8

TABLE_ROWS: list[tuple[GraphName, str, float]] = [
    (GraphName(GraphFamily.SINGLE_EDGE), ETA_CLOSED_FORMS[1], ETA[1]),
    *[(GraphName(GraphFamily.E, (k,)), ETA_CLOSED_FORMS[k], ETA[k]) for k in range(2, 7)],
    (GraphName(GraphFamily.TRIE), "(9+4sqrt(6))/15", TRIE_NORM),
    (GraphName(GraphFamily.GEE7), "9/7", GEE7_NORM),
    (GraphName(GraphFamily.GEE6_CYCLE), "4/3", GEE6_CYCLE_NORM),
]


@dataclass
class CommandResult:
    """Outcome of one subcommand."""

    results: Any
    text: str
    passed: bool = True
    seeds: dict[str, int] = field(default_factory=dict)


def fmt(value: float, places: int = 6) -> str:
    """Fixed-point display with round-half-even on the exact binary value."""
    if value != value:
        return "nan"
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(value).quantize(quantum, rounding=ROUND_HALF_EVEN))


def load_graph(source: str | None) -> BiGraph:
    """
    Resolve a matrix argument.

    A path to an existing file is parsed in the text or JSON format, "-" or
    no argument reads stdin, anything else is a catalog name.
    """
    if source is None or source == "-":
        return BiGraph.parse(sys.stdin.read())
    path = Path(source)
    if path.is_file():
        return BiGraph.parse(path.read_text())
    return catalog(parse_graph_name(source))


def _write_csv(frame: pd.DataFrame, destination: str | None) -> None:
    if destination:
        frame.to_csv(destination, index=False)
        logger.info(f"Wrote {len(frame)} rows to {destination}")


def _estimator(settings: Settings) -> NormEstimator:
    return NormEstimator(settings.bounds)


def cmd_norm(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Certified lower and upper bounds for one matrix."""
    G = load_graph(args.matrix)
    bounds = _estimator(settings).estimate(G.as_dense())
    text = "\n".join(
        [
            f"matrix:    {G.m}x{G.n}, {G.edge_count} edges",
            f"lower:     {fmt(bounds.lower)}",
            f"upper:     {fmt(bounds.upper)}",
            f"midpoint:  {fmt(bounds.midpoint)}",
            f"converged: {bounds.converged} (width {bounds.width:.2e}, tol {bounds.tol:.0e})",
        ]
    )
    return CommandResult(
        bounds.to_dict(include_witnesses=args.witness),
        text,
        seeds={"bounds": settings.bounds.seed},
    )


def cmd_classify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Norm class of a graph, optionally with forbidden-structure reports per component."""
    G = load_graph(args.matrix)
    result = classify(G, _estimator(settings))
    data = result.to_dict()
    lines = [f"class: {result.label.value}"]
    if result.eta_value is not None:
        lines.append(f"norm:  {fmt(result.eta_value)}")
    elif result.numeric is not None:
        lines.append(f"lower: {fmt(result.numeric.lower)}")
        lines.append(f"upper: {fmt(result.numeric.upper)}")
    for index, match in enumerate(result.per_component):
        F = f"F{match.matched_j}" if match.matched_j is not None else "none"
        lines.append(
            f"  component {index}: {match.component.m}x{match.component.n} -> "
            f"reduced {match.reduced.m}x{match.reduced.n}, least F: {F}"
        )

    if args.structure:
        reports = [forbidden_structure_report(match.reduced) for match in result.per_component]
        data["structure"] = [report.to_dict() for report in reports]
        for index, report in enumerate(reports):
            lines.append(f"  component {index} structures: {', '.join(report.found) or 'none'}")
            if report.degree_two is not None:
                shape = report.degree_two
                lines.append(f"    {shape.kind} {shape.name.label}, norm {fmt(shape.norm)}")
    return CommandResult(data, "\n".join(lines), seeds={"bounds": settings.bounds.seed})


def cmd_catalog(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """List the catalog, or show one entry with its exact value when certified."""
    if args.name:
        names = [parse_graph_name(args.name)]
    else:
        names = fixed_names() + [
            GraphName(GraphFamily.SIGMA, (3, 3)),
            GraphName(GraphFamily.SIGMA, (3, 4)),
            GraphName(GraphFamily.LAMBDA, (4,)),
            GraphName(GraphFamily.BRACKET_ONES, (3,)),
            GraphName(GraphFamily.TRIANGULAR, (4,)),
        ]

    entries = []
    lines = []
    for name in names:
        G = catalog(name)
        try:
            exact: float | None = certificate(name).exact_value
        except InputError:
            exact = None
        entries.append({"name": name.label, "exact": exact, **G.to_json()})
        value = fmt(exact) if exact is not None else "-"
        lines.append(f"{name.label:<16} {G.m}x{G.n:<4} {value:>10}  {'/'.join(G.to_json()['rows'])}")
    return CommandResult(entries, "\n".join(lines))


def cmd_verify_certs(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Re-check every stored certificate."""
    tol = args.cert_tol if args.cert_tol is not None else settings.certificates.tol
    max_n = args.bracket_max_n or settings.certificates.bracket_ones_max_n
    reports = verify_all(tol, max_n)
    lines = []
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        lines.append(f"{report.name:<16} {status}  ({len(report.checks)} checks)")
        for check in report.failures:
            lines.append(f"    {check.name}: {check.detail}")
    passed = all(report.passed for report in reports)
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} certificates pass at tol {tol:.0e}")
    return CommandResult([report.to_dict() for report in reports], "\n".join(lines), passed)


def cmd_table(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """The nine exact norms with closed forms, numeric bounds and certificate status."""
    estimator = _estimator(settings)
    rows = []
    for name, closed_form, value in TABLE_ROWS:
        bounds = estimator.estimate(catalog(name).as_dense())
        report = verify_certificate(certificate(name), settings.certificates.tol)
        rows.append(
            {
                "graph": name.label,
                "closed_form": closed_form,
                "value": value,
                "decimal": fmt(value, 5),
                "lower": bounds.lower,
                "upper": bounds.upper,
                "converged": bounds.converged,
                "numeric_match": bounds.converged and abs(bounds.midpoint - value) <= TABLE_TOL,
                "certificate": "PASS" if report.passed else "FAIL",
            }
        )

    frame = pd.DataFrame(rows)
    shown = frame[["graph", "closed_form", "decimal", "lower", "upper", "certificate"]].copy()
    shown["lower"] = shown["lower"].map(fmt)
    shown["upper"] = shown["upper"].map(fmt)
    passed = bool((frame["certificate"] == "PASS").all() and frame["numeric_match"].all())
    return CommandResult(rows, shown.to_string(index=False), passed, {"bounds": settings.bounds.seed})


def cmd_paths(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Path norms against the Popa bounds and 4/pi, as CSV-ready rows."""
    if args.max_n < 1:
        raise InputError(f"--max-n must be at least 1, got {args.max_n}")
    estimator = _estimator(settings)
    rows = []
    for n in range(1, args.max_n + 1):
        lower, upper = popa_bounds(n)
        row: dict[str, Any] = {
            "n": n,
            "path_norm": path_norm(n),
            "popa_lower": lower,
            "popa_upper": upper,
            "numeric_lower": float("nan"),
            "numeric_upper": float("nan"),
            "limit": PATH_LIMIT,
        }
        if n <= PATHS_NUMERIC_MAX_N:
            bounds = estimator.estimate(sigma(n, n).as_dense())
            row["numeric_lower"] = bounds.lower
            row["numeric_upper"] = bounds.upper
        rows.append(row)

    frame = pd.DataFrame(rows)
    _write_csv(frame, args.csv)
    text = frame.to_csv(index=False, float_format="%.6f")
    return CommandResult(rows, text.rstrip(), seeds={"bounds": settings.bounds.seed})


def cmd_enumerate(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Exhaustive sweep; ``--check`` adds the oracle, gap and degree-two checks."""
    config = settings.enumeration
    sweep = EnumerationSweep(
        max_m=args.max_m or config.max_m,
        max_n=args.max_n or config.max_n,
        settings=settings.bounds,
        workers=args.workers if args.workers is not None else config.workers,
        cache_dir=args.cache_dir or config.cache_dir,
    )
    summary = sweep.run(check=args.check)
    _write_csv(summary.to_frame(), args.csv)

    lines = [
        f"matrices: {summary.matrices}, classes: {len(summary.records)}, cache hits: {summary.cache_hits}",
        "labels:",
    ]
    for label, count in summary.histogram().items():
        lines.append(f"  {label:<12} {count}")
    if summary.checked:
        for title, failures in (
            ("oracle", summary.oracle_failures),
            ("gap", summary.gap_violations),
            ("degree-two", summary.degree_two_failures),
        ):
            lines.append(f"{title} failures: {len(failures)}")
            lines.extend(f"  {failure}" for failure in failures)
    return CommandResult(summary.to_dict(), "\n".join(lines), summary.passed, {"bounds": settings.bounds.seed})


def cmd_random(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Expected norm of G(m, n, p), with the growth-bound check at p = 1/2."""
    seed = args.seed if args.seed is not None else settings.random.seed
    trials = args.trials or settings.random.trials
    workers = args.workers if args.workers is not None else settings.random.workers
    model = RandomModel(m=args.m, n=args.n, p=args.p, master_seed=seed)
    estimate = expected_norm(model, trials, args.exhaustive, settings.bounds, workers)

    if args.csv and estimate.records:
        _write_csv(pd.DataFrame([record.to_dict() for record in estimate.records]), args.csv)

    data: dict[str, Any] = {"model": model.model_dump(), **estimate.to_dict()}
    lines = [
        f"G({model.m},{model.n},{model.p}) [{estimate.mode.value}]",
        f"mean:          {fmt(estimate.mean)}",
        f"std error:     {fmt(estimate.std_error)}",
        f"trials:        {estimate.trials}",
        f"non-converged: {estimate.non_converged}",
    ]
    passed = True
    if args.growth:
        if model.p != 0.5:
            raise InputError("The growth bound applies to p = 1/2 only")
        growth = GrowthReport(model.m, model.n, estimate)
        data["growth"] = growth.to_dict()
        passed = growth.holds
        lines.append(f"growth bound:  {fmt(growth.bound)} ({'holds' if growth.holds else 'FAILS'})")
    return CommandResult(data, "\n".join(lines), passed, {"master_seed": seed, "bounds": settings.bounds.seed})


def cmd_signs(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Sign-averaging inequality for a small matrix, or the full sign-matrix survey."""
    if args.survey:
        m, n = args.survey
        survey = sign_matrix_survey(m, n, settings.bounds)
        lines = [
            f"sign matrices {m}x{n}: M = {fmt(survey.mean_norm)}, max = {fmt(survey.max_norm)}",
            f"existence bound {fmt(survey.existence_bound)}: {survey.existence_holds}",
            f"E||G|| = {fmt(survey.expected_idempotent)} >= (M-1)/2 = "
            f"{fmt(survey.idempotent_bound)}: {survey.idempotent_holds}",
        ]
        passed = survey.existence_holds and survey.idempotent_holds
        return CommandResult(survey.to_dict(), "\n".join(lines), passed)

    G = load_graph(args.matrix)
    report = sign_average_bound_check(G.as_dense(), settings=settings.bounds)
    lines = [
        f"patterns: {report.patterns} ({report.non_converged} not converged)",
        f"M:        {fmt(report.mean_norm)}",
        f"max:      {fmt(report.max_lower)} <= 4M = {fmt(4 * report.mean_norm)}: {report.holds}",
    ]
    return CommandResult(report.to_dict(), "\n".join(lines), report.holds)


def cmd_remark56(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Numerical norms of the four obstructions against their five-decimal values."""
    estimator = _estimator(settings)
    rows = []
    lines = []
    for number, target in OBSTRUCTION_NORMS.items():
        bounds = estimator.estimate(OBSTRUCTIONS[number].as_dense())
        matched = bounds.converged and abs(bounds.midpoint - target) <= REMARK_TOL
        label = GraphName(GraphFamily.OBSTRUCTION, (number,)).label
        rows.append(
            {
                "graph": label,
                "target": target,
                "lower": bounds.lower,
                "upper": bounds.upper,
                "midpoint": bounds.midpoint,
                "converged": bounds.converged,
                "restarts_used": bounds.restarts_used,
                "matched": matched,
            }
        )
        lines.append(
            f"{label:<16} {fmt(bounds.midpoint)}  target {target:.5f}  {'OK' if matched else 'MISMATCH'}"
        )
    passed = all(row["matched"] for row in rows)
    return CommandResult(rows, "\n".join(lines), passed, {"bounds": settings.bounds.seed})


def cmd_witness(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Dump the extremal path construction or a stored certificate."""
    if args.path_n is not None:
        witness = build_path_witness(args.path_n)
        defects = witness.defects()
        data = {**witness.to_dict(), "defects": defects}
        worst = max(defects.values())
        text = f"path witness n={witness.n}: value {fmt(witness.value)}, max defect {worst:.2e}"
        return CommandResult(data, text, worst <= settings.certificates.tol)

    if not args.graph:
        raise InputError("witness needs --path-n or --graph")
    cert = certificate(parse_graph_name(args.graph))
    report = verify_certificate(cert, settings.certificates.tol)
    data = {**cert.payload(), "verification": report.to_dict()}
    value = fmt(cert.exact_value) if cert.exact_value is not None else f"> {cert.target_label}"
    text = f"{cert.name}: norm {value}, certificate {'PASS' if report.passed else 'FAIL'}"
    return CommandResult(data, text, report.passed)
