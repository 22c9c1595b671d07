"""Assumption-based argumentation solver."""

from .arguments import (
    ArgumentFamily,
    ArgumentTree,
    assumption_set,
    build_all_families,
    build_argument_family,
    is_actual_argument,
)
from .dispute import (
    ArgumentRef,
    CopyStrategy,
    DisputeEngine,
    DisputeTree,
    EngineConfig,
    add_status,
    copy_branch,
)
from .dsl import (
    FrameworkInvalid,
    ParseError,
    ParseResult,
    construct_framework,
    parse,
    parse_framework,
    serialize_framework,
)
from .model import (
    TAU,
    Framework,
    Rule,
    ValidationError,
    infer_assumptions,
    infer_symbols,
    is_ground_truth,
    validate,
)
from .semantics import (
    attackable_arguments,
    is_complete,
    is_complete_full,
    is_conflict_free,
    is_ideal,
    is_stable,
)
from .solver import (
    PerfRecord,
    SolveReport,
    Statistics,
    compute_stats,
    measure,
    solve,
    to_canonical_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
