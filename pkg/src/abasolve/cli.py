"""Command-line entry point: solve one DSL file and print the report.

Exit codes: 0 success, 1 parse/validation/file errors, 2 resource-limit
errors, 64 bad usage.
"""

from __future__ import annotations

import argparse
import sys

from .dispute import CopyStrategy, EngineConfig
from .solver import SolveReport, solve, to_canonical_json

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RESOURCE_ERROR = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        print(f"error: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(prog="aba-solve", description=__doc__)
    parser.add_argument("file", help="input .aba file")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the dispute-branch cache")
    parser.add_argument("--copy-strategy", choices=["serialize", "recursive"],
                        default="serialize")
    parser.add_argument("--max-branch", type=int, default=1000)
    parser.add_argument("--max-depth", type=int, default=1000)
    parser.add_argument("--no-stop-on-grounded", action="store_true",
                        help="keep enumerating dispute trees after a grounded one")
    parser.add_argument("--debug", action="store_true")
    parser.add_argument("--output", choices=["json", "text"], default="json")
    parser.add_argument("--log-file", default=None,
                        help="append a wall/CPU timing line per solve")
    parser.add_argument("--with-timing", action="store_true",
                        help="include the (non-deterministic) timing section in JSON")
    return parser


def config_from_args(args: argparse.Namespace) -> EngineConfig:
    return EngineConfig(
        use_cache=not args.no_cache,
        copy_strategy=CopyStrategy(args.copy_strategy),
        max_branch=args.max_branch,
        max_depth=args.max_depth,
        stop_on_grounded=not args.no_stop_on_grounded,
        debug_output=args.debug,
    )


def render_text(report: SolveReport) -> str:
    lines = []
    if report.errors:
        lines.append("errors:")
        lines.extend(f"  [{e.get('category')}] {e.get('message')}" for e in report.errors)
    s = report.stats
    lines.append(f"symbols: {s.n_symbols}")
    lines.append(f"assumptions: {s.n_assumptions}")
    lines.append(f"potential arguments: {s.n_potential_arguments}")
    lines.append(f"actual arguments: {s.n_actual_arguments}")
    lines.append(
        "semantics counts: "
        f"conflict-free={s.n_conflict_free} admissible={s.n_admissible} "
        f"complete={s.n_complete} grounded={s.n_grounded} "
        f"ideal={s.n_ideal} stable={s.n_stable}"
    )
    for a in report.arguments:
        if not a.is_actual:
            continue
        flags = []
        for name in ("conflict_free", "stable", "admissible", "grounded",
                     "complete", "ideal"):
            if getattr(a, name):
                flags.append(name)
        support = "{" + ",".join(a.assumption_set) + "}"
        lines.append(f"  {support} |- {a.claim} [#{a.tree_index}]: "
                     + (", ".join(flags) if flags else "-"))
    lines.append(f"wall time: {report.wall_time:.6f}s")
    lines.append(f"cpu time: {report.cpu_time:.6f}s")
    return "\n".join(lines)


def cli_run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with open(args.file, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = solve(raw, config_from_args(args), log_file=args.log_file)
    if args.output == "json":
        print(to_canonical_json(report, include_timing=args.with_timing))
    else:
        print(render_text(report))
    if report.has_error_category("parse") or report.has_error_category("validation"):
        return EXIT_INPUT_ERROR
    if report.errors:
        return EXIT_RESOURCE_ERROR
    return EXIT_OK


def main() -> None:
    raise SystemExit(cli_run(sys.argv[1:]))
