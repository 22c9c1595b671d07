"""End-to-end solving: parse, build arguments, run disputes, judge, report.

The canonical JSON form is deterministic byte-for-byte: keys sorted, arrays
in fixed order, and the volatile timing section excluded.  Timing is carried
on the report object and can be included on request.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

from . import semantics
from .arguments import ArgumentFamily, build_all_families
from .dispute import (
    ArgumentRef,
    DisputeEngine,
    DisputeTree,
    EngineConfig,
)
from .dsl import FrameworkInvalid, construct_framework, parse
from .errors import (
    SolveMemoryExceeded,
    SolverLimitError,
    SolveTimeout,
)
from .model import Framework


@dataclass
class Statistics:
    n_symbols: int = 0
    n_potential_arguments: int = 0
    n_actual_arguments: int = 0
    n_assumptions: int = 0
    n_conflict_free: int = 0
    n_admissible: int = 0
    n_complete: int = 0
    n_grounded: int = 0
    n_ideal: int = 0
    n_stable: int = 0
    wall_time: float = 0.0
    cpu_time: float = 0.0


@dataclass
class ArgumentVerdict:
    claim: str
    tree_index: int
    assumption_set: list[str]
    is_actual: bool
    conflict_free: bool = False
    stable: bool = False
    admissible: bool = False
    grounded: bool = False
    complete: bool = False
    ideal: bool = False


@dataclass
class SolveReport:
    framework: Framework | None = None
    families: dict[str, ArgumentFamily] = field(default_factory=dict)
    arguments: list[ArgumentVerdict] = field(default_factory=list)
    dispute_trees: list[DisputeTree] = field(default_factory=list)
    stats: Statistics = field(default_factory=Statistics)
    wall_time: float = 0.0
    cpu_time: float = 0.0
    errors: list[dict] = field(default_factory=list)
    cache_hits: int = 0

    def has_error_category(self, category: str) -> bool:
        return any(e.get("category") == category for e in self.errors)


@dataclass
class PerfRecord:
    identifier: str
    wall_time: float
    cpu_time: float


def measure(
    identifier: str,
    thunk: Callable[[], object],
    log_file: str | None = None,
) -> tuple[object, PerfRecord]:
    """Run the thunk, timing wall and CPU seconds around it; append one log line."""
    wall0 = time.perf_counter()
    cpu0 = time.process_time()
    result = thunk()
    record = PerfRecord(
        identifier=identifier,
        wall_time=time.perf_counter() - wall0,
        cpu_time=time.process_time() - cpu0,
    )
    if log_file:
        line = f"{identifier}\t{record.wall_time:.6f}\t{record.cpu_time:.6f}\n"
        try:
            with open(log_file, "a", encoding="utf-8") as fh:
                fh.write(line)
        except OSError as exc:
            print(f"perf log write failed: {exc}")
    return result, record


def solve(
    raw_text: str,
    config: EngineConfig | None = None,
    log_file: str | None = None,
) -> SolveReport:
    report, record = measure(
        "solve", lambda: _solve_inner(raw_text, config), log_file
    )
    assert isinstance(report, SolveReport)
    report.wall_time = record.wall_time
    report.cpu_time = record.cpu_time
    report.stats.wall_time = record.wall_time
    report.stats.cpu_time = record.cpu_time
    return report


def _solve_inner(raw_text: str, config: EngineConfig | None) -> SolveReport:
    report = SolveReport()
    parsed = parse(raw_text)
    if parsed.errors:
        report.errors = [
            {
                "category": "parse",
                "line": e.line_number,
                "message": e.message,
                "text": e.offending_text,
            }
            for e in parsed.errors
        ]
        return report
    try:
        framework = construct_framework(parsed)
    except FrameworkInvalid as exc:
        report.errors = [
            {"category": "validation", "message": e.message} for e in exc.errors
        ]
        return report
    report.framework = framework

    try:
        families = build_all_families(framework)
    except SolverLimitError as exc:
        report.errors.append({"category": exc.category, "message": str(exc)})
        return report
    report.families = families

    engine = DisputeEngine(framework, families, config)
    trees_by_root: dict[ArgumentRef, list[DisputeTree]] = {}
    for symbol in sorted(families):
        family = families[symbol]
        for index, tree in enumerate(family.trees):
            family.is_conflict_free.append(
                semantics.is_conflict_free(tree, framework)
            )
            family.is_stable.append(semantics.is_stable(tree, framework))
            if not family.is_actual[index]:
                continue
            ref = ArgumentRef(symbol, index)
            try:
                trees_by_root[ref] = engine.construct_dispute_trees(ref)
            except (SolverLimitError, SolveTimeout, SolveMemoryExceeded) as exc:
                trees_by_root[ref] = []
                report.errors.append(
                    {
                        "category": exc.category,
                        "message": f"{ref.label()}: {exc}",
                    }
                )
    report.cache_hits = engine.cache_hits

    admissible: dict[ArgumentRef, bool] = {
        ref: any(t.is_admissible for t in trees)
        for ref, trees in trees_by_root.items()
    }
    for ref, trees in trees_by_root.items():
        for tree in trees:
            tree.is_complete = semantics.is_complete(tree, framework, families)
            tree.is_ideal = semantics.is_ideal(tree, admissible)
            report.dispute_trees.append(tree)

    for symbol in sorted(families):
        family = families[symbol]
        for index in range(len(family.trees)):
            ref = ArgumentRef(symbol, index)
            verdict = ArgumentVerdict(
                claim=symbol,
                tree_index=index,
                assumption_set=sorted(family.trees[index].assumption_set),
                is_actual=family.is_actual[index],
                conflict_free=family.is_conflict_free[index],
                stable=family.is_stable[index],
            )
            trees = trees_by_root.get(ref, [])
            verdict.admissible = any(t.is_admissible for t in trees)
            verdict.grounded = any(t.is_grounded for t in trees)
            verdict.complete = any(bool(t.is_complete) for t in trees)
            verdict.ideal = any(bool(t.is_ideal) for t in trees)
            report.arguments.append(verdict)

    report.stats = compute_stats(framework, families, report.arguments)
    return report


def compute_stats(
    framework: Framework,
    families: dict[str, ArgumentFamily],
    arguments: list[ArgumentVerdict],
) -> Statistics:
    stats = Statistics(
        n_symbols=len(framework.symbols),
        n_assumptions=len(framework.assumptions),
        n_potential_arguments=sum(len(f.trees) for f in families.values()),
        n_actual_arguments=sum(1 for a in arguments if a.is_actual),
    )
    actual = [a for a in arguments if a.is_actual]
    stats.n_conflict_free = sum(1 for a in actual if a.conflict_free)
    stats.n_admissible = sum(1 for a in actual if a.admissible)
    stats.n_complete = sum(1 for a in actual if a.complete)
    stats.n_grounded = sum(1 for a in actual if a.grounded)
    stats.n_ideal = sum(1 for a in actual if a.ideal)
    stats.n_stable = sum(1 for a in actual if a.stable)
    return stats


def report_to_dict(report: SolveReport, include_timing: bool = False) -> dict:
    fw = report.framework
    framework_dict = None
    if fw is not None:
        framework_dict = {
            "symbols": sorted(fw.symbols),
            "assumptions": sorted(fw.assumptions),
            "rules": [
                {"body": list(r.body), "head": r.head} for r in fw.rules
            ],
            "contraries": {a: fw.contraries[a] for a in sorted(fw.contraries)},
        }
    def tree_shape(a: ArgumentVerdict) -> dict:
        tree = report.families[a.claim].trees[a.tree_index]
        return {
            "nodes": sorted(tree.nodes),
            "edges": sorted([x, y] for x, y in tree.edges),
        }

    out = {
        "framework": framework_dict,
        "arguments": [
            {
                "claim": a.claim,
                "tree_index": a.tree_index,
                **tree_shape(a),
                "assumption_set": a.assumption_set,
                "is_actual": a.is_actual,
                "conflict_free": a.conflict_free,
                "stable": a.stable,
                "admissible": a.admissible,
                "grounded": a.grounded,
                "complete": a.complete,
                "ideal": a.ideal,
            }
            for a in report.arguments
        ],
        "dispute_trees": [
            {
                "root_claim": t.root.claim,
                "root_index": t.root.tree_index,
                "nodes": sorted(n.label() for n in t.nodes),
                "edges": sorted([a.label(), b.label()] for a, b in t.edges),
                "statuses": {
                    n.label(): t.status[n] for n in sorted(t.status)
                },
                "grounded": t.is_grounded,
                "admissible": t.is_admissible,
                "complete": bool(t.is_complete),
                "ideal": bool(t.is_ideal),
            }
            for t in report.dispute_trees
        ],
        "stats": {
            "n_symbols": report.stats.n_symbols,
            "n_potential_arguments": report.stats.n_potential_arguments,
            "n_actual_arguments": report.stats.n_actual_arguments,
            "n_assumptions": report.stats.n_assumptions,
            "n_conflict_free": report.stats.n_conflict_free,
            "n_admissible": report.stats.n_admissible,
            "n_complete": report.stats.n_complete,
            "n_grounded": report.stats.n_grounded,
            "n_ideal": report.stats.n_ideal,
            "n_stable": report.stats.n_stable,
        },
        "errors": report.errors,
    }
    if include_timing:
        out["timing"] = {
            "wall_time_seconds": round(report.wall_time, 6),
            "cpu_time_seconds": round(report.cpu_time, 6),
        }
    return out


def to_canonical_json(report: SolveReport, include_timing: bool = False) -> str:
    """Deterministic serialization; timing excluded unless requested."""
    return json.dumps(
        report_to_dict(report, include_timing=include_timing),
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=False,
    )
