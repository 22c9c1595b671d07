"""Dispute-tree construction.

Proponent nodes are attacked exhaustively; each opponent node picks exactly
one counter-argument, and every alternative pick spawns a further dispute
tree (enumerated depth-first with an odometer over the recorded decision
points).  Infinity is detected through a history stack of (argument, status)
pairs; a repeat clears the grounded flag.  Status conflicts clear the
admissible flag.

Completed proponent subtrees are cached and merged on re-encounter.  A
cached branch is only written, and only merged, when doing so is provably
equivalent to re-expanding it (no internal infinity hits or status
conflicts, no alternative decisions inside, and no overlap between the
branch and the live history).  This keeps every verdict identical with the
cache on or off while still skipping repeated work on shared sub-disputes.
"""

from __future__ import annotations

import copy
import enum
import pickle
import sys
from dataclasses import dataclass, field

from .arguments import ArgumentFamily
from .errors import BranchLimitExceeded, DepthLimitExceeded
from .model import Framework

PROPONENT = "Proponent"
OPPONENT = "Opponent"


class CopyStrategy(enum.Enum):
    SERIALIZE_ROUNDTRIP = "serialize"
    RECURSIVE_COPY = "recursive"


@dataclass(frozen=True, order=True)
class ArgumentRef:
    claim: str
    tree_index: int

    def label(self) -> str:
        return f"{self.claim}#{self.tree_index}"


@dataclass
class DisputeTree:
    root: ArgumentRef
    nodes: set[ArgumentRef] = field(default_factory=set)
    edges: list[tuple[ArgumentRef, ArgumentRef]] = field(default_factory=list)
    status: dict[ArgumentRef, str] = field(default_factory=dict)
    is_grounded: bool = True
    is_admissible: bool = True
    is_complete: bool | None = None
    is_ideal: bool | None = None


@dataclass
class Branch:
    """A completed proponent subtree, reusable across dispute trees."""

    root: ArgumentRef
    nodes: set[ArgumentRef]
    edges: list[tuple[ArgumentRef, ArgumentRef]]
    status: dict[ArgumentRef, str]
    pairs_seen: frozenset[tuple[ArgumentRef, str]]


@dataclass
class EngineConfig:
    use_cache: bool = True
    copy_strategy: CopyStrategy = CopyStrategy.SERIALIZE_ROUNDTRIP
    max_branch: int = 1000
    max_depth: int = 1000
    stop_on_grounded: bool = True
    debug_output: bool = False
    step_hook: object = None  # callable or None; invoked at each expansion step

    def __post_init__(self) -> None:
        if self.max_branch < 1 or self.max_depth < 1:
            raise ValueError("max_branch and max_depth must be >= 1")


def copy_branch(branch: Branch, strategy: CopyStrategy) -> Branch:
    if strategy is CopyStrategy.SERIALIZE_ROUNDTRIP:
        return pickle.loads(pickle.dumps(branch))
    return copy.deepcopy(branch)


def add_status(node: ArgumentRef, status: str, tree: DisputeTree) -> None:
    """Record a status; a conflicting re-assignment makes the tree inadmissible."""
    previous = tree.status.get(node)
    if previous is not None and previous != status:
        tree.is_admissible = False
    tree.status[node] = status


@dataclass
class _Frame:
    """Bookkeeping for one proponent expansion, for cache-write eligibility."""

    start_hist: int
    start_edge: int
    pairs_seen: set[tuple[ArgumentRef, str]] = field(default_factory=set)
    cacheable: bool = True


class DisputeEngine:
    """One engine instance per solve run; holds the shared branch cache."""

    def __init__(
        self,
        framework: Framework,
        families: dict[str, ArgumentFamily],
        config: EngineConfig | None = None,
    ):
        self.framework = framework
        self.families = families
        self.config = config or EngineConfig()
        self.cache: dict[ArgumentRef, Branch] = {}
        self.cache_hits = 0
        self._attackers: dict[str, list[ArgumentRef]] = {}

    # -- public API ---------------------------------------------------------

    def construct_dispute_trees(self, root: ArgumentRef) -> list[DisputeTree]:
        """All dispute trees for ``root``, one per branching choice explored."""
        trees: list[DisputeTree] = []
        choices: list[int] = []
        while True:
            if len(trees) >= self.config.max_branch:
                raise BranchLimitExceeded(
                    f"dispute trees for {root.label()} exceeded "
                    f"{self.config.max_branch} branches"
                )
            tree, alternatives = self._grow(root, choices)
            trees.append(tree)
            if self.config.stop_on_grounded and tree.is_grounded:
                break
            choices = _advance(choices, alternatives)
            if choices is None:
                break
        return trees

    def actual_attackers(self, assumption: str) -> list[ArgumentRef]:
        """Actual arguments whose claim is the contrary of ``assumption``."""
        if assumption not in self._attackers:
            contrary = self.framework.contraries.get(assumption)
            refs: list[ArgumentRef] = []
            if contrary is not None and contrary in self.families:
                family = self.families[contrary]
                refs = [
                    ArgumentRef(contrary, i)
                    for i, actual in enumerate(family.is_actual)
                    if actual
                ]
            self._attackers[assumption] = refs
        return self._attackers[assumption]

    # -- one tree -----------------------------------------------------------

    def _grow(self, root: ArgumentRef, choices: list[int]) -> tuple[DisputeTree, list[int]]:
        tree = DisputeTree(root=root)
        self._history: list[tuple[ArgumentRef, str]] = []
        self._frames: list[_Frame] = []
        self._choices = choices
        self._cursor = 0
        self._alternatives: list[int] = []
        needed = 3 * self.config.max_depth + 200
        if sys.getrecursionlimit() < needed:
            sys.setrecursionlimit(needed)
        tree.nodes.add(root)
        add_status(root, PROPONENT, tree)
        self._history.append((root, PROPONENT))
        try:
            self._expand_proponent(root, tree, depth=1)
        except RecursionError:
            raise DepthLimitExceeded("interpreter recursion limit reached") from None
        finally:
            self._history.pop()
        assert not self._history, "history stack must be balanced"
        return tree, self._alternatives

    def _step(self, depth: int) -> None:
        if depth > self.config.max_depth:
            raise DepthLimitExceeded(
                f"dispute-tree expansion exceeded depth {self.config.max_depth}"
            )
        hook = self.config.step_hook
        if hook is not None:
            hook()

    def _record_pair(self, pair: tuple[ArgumentRef, str]) -> None:
        for frame in self._frames:
            frame.pairs_seen.add(pair)

    def _spoil_frames(self) -> None:
        for frame in self._frames:
            frame.cacheable = False

    def _is_infinite(self, node: ArgumentRef, status: str, tree: DisputeTree) -> bool:
        if (node, status) in self._history:
            tree.is_grounded = False
            self._spoil_frames()
            if self.config.debug_output:
                print(f"infinite branch at {node.label()} [{status}]", file=sys.stderr)
            return True
        return False

    def _add_status(self, node: ArgumentRef, status: str, tree: DisputeTree) -> None:
        if tree.status.get(node) not in (None, status):
            self._spoil_frames()
        add_status(node, status, tree)
        self._record_pair((node, status))

    def _argument(self, ref: ArgumentRef):
        return self.families[ref.claim].trees[ref.tree_index]

    def _expand_proponent(self, node: ArgumentRef, tree: DisputeTree, depth: int) -> None:
        self._step(depth)
        frame = _Frame(start_hist=len(self._history), start_edge=len(tree.edges))
        self._frames.append(frame)
        argument = self._argument(node)
        for assumption in sorted(argument.assumption_set):
            for attacker in self.actual_attackers(assumption):
                tree.nodes.add(attacker)
                tree.edges.append((node, attacker))
                self._add_status(attacker, OPPONENT, tree)
                if self._is_infinite(attacker, OPPONENT, tree):
                    continue
                self._history.append((attacker, OPPONENT))
                try:
                    self._expand_opponent(attacker, tree, depth + 1)
                finally:
                    self._history.pop()
        self._frames.pop()
        for outer in self._frames:
            outer.pairs_seen |= frame.pairs_seen
            outer.cacheable = outer.cacheable and frame.cacheable
        if self.config.use_cache and frame.cacheable and node not in self.cache:
            self._write_cache(node, tree, frame)

    def _expand_opponent(self, node: ArgumentRef, tree: DisputeTree, depth: int) -> None:
        self._step(depth)
        argument = self._argument(node)
        pairs = [
            (assumption, attacker)
            for assumption in sorted(argument.assumption_set)
            for attacker in self.actual_attackers(assumption)
        ]
        if not pairs:
            return  # nothing can counter-attack; the branch terminates here
        if self._cursor < len(self._choices):
            pick = self._choices[self._cursor]
        else:
            pick = 0
            self._choices.append(0)
        self._cursor += 1
        self._alternatives.append(len(pairs))
        if len(pairs) > 1:
            self._spoil_frames()
        _, counter = pairs[pick]

        tree.nodes.add(counter)
        tree.edges.append((node, counter))
        self._add_status(counter, PROPONENT, tree)
        if self._is_infinite(counter, PROPONENT, tree):
            return
        if self.config.use_cache:
            branch = self.cache.get(counter)
            if branch is not None and not (branch.pairs_seen & set(self._history)):
                self.cache_hits += 1
                self._merge_branch(branch, tree)
                return
        self._history.append((counter, PROPONENT))
        try:
            self._expand_proponent(counter, tree, depth + 1)
        finally:
            self._history.pop()

    def _write_cache(self, node: ArgumentRef, tree: DisputeTree, frame: _Frame) -> None:
        edges = list(tree.edges[frame.start_edge:])
        nodes = {node}
        for a, b in edges:
            nodes.add(a)
            nodes.add(b)
        status = {n: tree.status[n] for n in nodes}
        self.cache[node] = Branch(
            root=node,
            nodes=nodes,
            edges=edges,
            status=status,
            pairs_seen=frozenset(frame.pairs_seen) | {(node, PROPONENT)},
        )

    def _merge_branch(self, branch: Branch, tree: DisputeTree) -> None:
        replica = copy_branch(branch, self.config.copy_strategy)
        self._record_pair((replica.root, PROPONENT))
        for ref in sorted(replica.nodes):
            tree.nodes.add(ref)
            self._add_status(ref, replica.status[ref], tree)
        tree.edges.extend(replica.edges)


def _advance(choices: list[int], alternatives: list[int]) -> list[int] | None:
    """Odometer step over the decision points of the last generated tree."""
    assert len(choices) == len(alternatives)
    nxt = list(choices)
    while nxt:
        i = len(nxt) - 1
        if nxt[i] + 1 < alternatives[i]:
            nxt[i] += 1
            return nxt
        nxt.pop()
        alternatives = alternatives[:-1]
    return None
