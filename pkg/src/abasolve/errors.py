"""Exception types shared across the solver."""


class SolverLimitError(Exception):
    """A configured resource limit was hit; reported as a runtime-category error."""

    category = "runtime"


class TreeLimitExceeded(SolverLimitError):
    """Too many argument trees for one claim symbol."""


class BranchLimitExceeded(SolverLimitError):
    """Dispute-tree branching exceeded the configured maximum."""


class DepthLimitExceeded(SolverLimitError):
    """Dispute-tree expansion recursed past the configured maximum depth."""


class SolveTimeout(Exception):
    """Raised cooperatively by the bench harness when the wall-clock budget runs out."""

    category = "timeout"


class SolveMemoryExceeded(Exception):
    """Raised cooperatively by the bench harness when the memory budget runs out."""

    category = "memory"
