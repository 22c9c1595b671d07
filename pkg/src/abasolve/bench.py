"""Benchmark harness: run solve over fixture files under time/memory limits.

Limits are enforced cooperatively inside the engine (a hook checked at each
expansion step) plus a wall-clock watchdog around the worker thread.
Failures are data, never crashes: each case ends with an exception set drawn
from {RUNTIME, TIMEOUT, MEMORY}, or NONE.
"""

from __future__ import annotations

import argparse
import csv
import sys
import threading
import time
import tracemalloc
from dataclasses import dataclass, field
from pathlib import Path

from .dispute import EngineConfig
from .errors import SolveMemoryExceeded, SolveTimeout
from .solver import SolveReport, solve

NONE = "NONE"
RUNTIME = "RUNTIME"
TIMEOUT = "TIMEOUT"
MEMORY = "MEMORY"


@dataclass
class Limits:
    timeout_seconds: float = 120.0
    memory_mib: float = 5120.0
    max_branch: int = 1000
    max_depth: int = 1000


@dataclass
class CaseResult:
    case_name: str
    wall_time: float
    cpu_time: float
    exceptions: set[str] = field(default_factory=lambda: {NONE})

    def exception_label(self) -> str:
        if self.exceptions == {NONE}:
            return ""
        return " & ".join(sorted(self.exceptions))


@dataclass
class BenchSummary:
    n_cases: int = 0
    n_with_exceptions: int = 0
    n_timeout: int = 0
    n_runtime: int = 0
    n_memory: int = 0
    total_runtime: float = 0.0
    non_exception_total: float = 0.0
    non_exception_average: float = 0.0


class _Budget:
    """Cooperative limit checks shared with the engine's step hook."""

    def __init__(self, limits: Limits):
        self.deadline = time.monotonic() + limits.timeout_seconds
        self.memory_bytes = int(limits.memory_mib * 1024 * 1024)
        self.tripped: set[str] = set()

    def check(self) -> None:
        hit = False
        if time.monotonic() > self.deadline:
            self.tripped.add(TIMEOUT)
            hit = True
        if tracemalloc.is_tracing():
            current, _ = tracemalloc.get_traced_memory()
            if current > self.memory_bytes:
                self.tripped.add(MEMORY)
                hit = True
        if hit:
            if MEMORY in self.tripped and TIMEOUT not in self.tripped:
                raise SolveMemoryExceeded("memory budget exceeded")
            raise SolveTimeout("time budget exceeded")


def run_case(file: str | Path, limits: Limits | None = None) -> CaseResult:
    limits = limits or Limits()
    path = Path(file)
    budget = _Budget(limits)
    config = EngineConfig(
        max_branch=limits.max_branch,
        max_depth=limits.max_depth,
        step_hook=budget.check,
    )
    raw = path.read_text(encoding="utf-8")

    holder: dict[str, SolveReport] = {}

    def work() -> None:
        tracemalloc.start()
        try:
            holder["report"] = solve(raw, config)
        finally:
            tracemalloc.stop()

    wall0 = time.perf_counter()
    cpu0 = time.process_time()
    worker = threading.Thread(target=work, daemon=True)
    worker.start()
    # Watchdog: generous hard cap on top of the cooperative deadline.
    worker.join(timeout=limits.timeout_seconds * 2 + 5)
    wall = time.perf_counter() - wall0
    cpu = time.process_time() - cpu0

    exceptions: set[str] = set(budget.tripped)
    if worker.is_alive():
        exceptions.add(TIMEOUT)
    elif "report" in holder:
        report = holder["report"]
        if report.has_error_category("runtime"):
            exceptions.add(RUNTIME)
        if report.has_error_category("parse") or report.has_error_category("validation"):
            exceptions.add(RUNTIME)
        if report.has_error_category("timeout"):
            exceptions.add(TIMEOUT)
        if report.has_error_category("memory"):
            exceptions.add(MEMORY)
    else:
        exceptions.add(RUNTIME)
    if not exceptions:
        exceptions = {NONE}
    return CaseResult(
        case_name=path.stem,
        wall_time=wall,
        cpu_time=cpu,
        exceptions=exceptions,
    )


def aggregate(results: list[CaseResult]) -> BenchSummary:
    summary = BenchSummary(n_cases=len(results))
    for result in results:
        summary.total_runtime += result.wall_time
        if result.exceptions == {NONE}:
            summary.non_exception_total += result.wall_time
            continue
        summary.n_with_exceptions += 1
        if TIMEOUT in result.exceptions:
            summary.n_timeout += 1
        if RUNTIME in result.exceptions:
            summary.n_runtime += 1
        if MEMORY in result.exceptions:
            summary.n_memory += 1
    clean = summary.n_cases - summary.n_with_exceptions
    if clean > 0:
        summary.non_exception_average = summary.non_exception_total / clean
    return summary


def write_csv(results: list[CaseResult], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["case", "wall_time", "cpu_time", "exceptions"])
        for r in results:
            writer.writerow(
                [r.case_name, f"{r.wall_time:.6f}", f"{r.cpu_time:.6f}",
                 r.exception_label()]
            )


def summary_lines(summary: BenchSummary) -> list[str]:
    return [
        f"Number of cases\t{summary.n_cases}",
        f"Number of cases with exceptions\t{summary.n_with_exceptions}",
        f"Number of cases with timeout exception\t{summary.n_timeout}",
        f"Number of cases with runtime exception\t{summary.n_runtime}",
        f"Number of cases with memory limit exception\t{summary.n_memory}",
        f"Total runtime\t{summary.total_runtime:.4f}s",
        f"Number of cases without exceptions\t{summary.n_cases - summary.n_with_exceptions}",
        f"Non-exception total runtime\t{summary.non_exception_total:.4f}s",
        f"Non-exception average runtime\t{summary.non_exception_average:.4f}s",
    ]


def collect_cases(paths: list[str]) -> list[Path]:
    files: list[Path] = []
    for entry in paths:
        p = Path(entry)
        if p.is_dir():
            files.extend(sorted(p.glob("*.aba")))
        else:
            files.append(p)
    return files


def cli_run(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(prog="aba-bench", description=__doc__)
    parser.add_argument("paths", nargs="+", help=".aba files or directories")
    parser.add_argument("--timeout", type=float, default=120.0)
    parser.add_argument("--memory-mib", type=float, default=5120.0)
    parser.add_argument("--csv", default=None, help="per-case CSV output path")
    parser.add_argument("--summary", default=None, help="summary table output path")
    parser.add_argument("--parallel", type=int, default=1,
                        help="number of worker threads (default sequential)")
    args = parser.parse_args(argv)
    limits = Limits(timeout_seconds=args.timeout, memory_mib=args.memory_mib)
    files = collect_cases(args.paths)

    if args.parallel > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(lambda f: run_case(f, limits), files))
    else:
        results = [run_case(f, limits) for f in files]

    for r in results:
        label = r.exception_label() or "ok"
        print(f"{r.case_name}\t{r.wall_time:.6f}\t{r.cpu_time:.6f}\t{label}")
    summary = aggregate(results)
    for line in summary_lines(summary):
        print(line)
    if args.csv:
        write_csv(results, args.csv)
    if args.summary:
        Path(args.summary).write_text(
            "\n".join(summary_lines(summary)) + "\n", encoding="utf-8"
        )
    return 0


def main() -> None:
    raise SystemExit(cli_run(sys.argv[1:]))
