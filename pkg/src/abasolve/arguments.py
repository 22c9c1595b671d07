"""Argument-tree construction.

For each claim symbol all trees are enumerated by branching over the rule
chosen at every node.  Node identity is the symbol label, so a repeated
symbol shares one node and its rule choice; the structure is a rooted DAG
kept acyclic unless a derivation loops back onto the current path, in which
case the tree is flagged cyclic and can only ever count as a potential
argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import TreeLimitExceeded
from .model import TAU, Framework

MAX_ARGUMENT_TREES = 1000

# Rule choice for a symbol kept as an assumption leaf.
ASSUMPTION_LEAF = None


@dataclass
class ArgumentTree:
    root_symbol: str
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]
    rule_choice: dict[str, int | None]
    is_cyclic: bool
    assumption_set: frozenset[str]

    def leaves(self) -> frozenset[str]:
        supported = {a for a, _ in self.edges}
        return frozenset(n for n in self.nodes if n not in supported)


@dataclass
class ArgumentFamily:
    """All argument trees sharing one claim symbol, with per-tree verdict slots."""

    root_symbol: str
    trees: list[ArgumentTree] = field(default_factory=list)
    is_actual: list[bool] = field(default_factory=list)
    is_conflict_free: list[bool] = field(default_factory=list)
    is_stable: list[bool] = field(default_factory=list)


@dataclass
class _State:
    choice: dict[str, int | None]
    edges: list[tuple[str, str]]
    is_cyclic: bool

    def fork(self) -> "_State":
        return _State(dict(self.choice), list(self.edges), self.is_cyclic)


def build_argument_family(
    root_symbol: str,
    framework: Framework,
    max_trees: int = MAX_ARGUMENT_TREES,
) -> ArgumentFamily:
    family = ArgumentFamily(root_symbol=root_symbol)
    states = _expand(root_symbol, (root_symbol,), _State({}, [], False), framework)
    if len(states) > max_trees:
        raise TreeLimitExceeded(
            f"claim '{root_symbol}' produced more than {max_trees} argument trees"
        )
    for state in states:
        tree = _finish_tree(root_symbol, state, framework)
        family.trees.append(tree)
        family.is_actual.append(is_actual_argument(tree, framework))
    return family


def _options(symbol: str, framework: Framework) -> list[int | None]:
    opts: list[int | None] = []
    if symbol in framework.assumptions:
        opts.append(ASSUMPTION_LEAF)
    opts.extend(i for i, _ in framework.rules_for(symbol))
    return opts


def _expand(
    symbol: str, path: tuple[str, ...], state: _State, framework: Framework
) -> list[_State]:
    """Return every completed expansion of ``symbol``, branching over rules."""
    if symbol in state.choice:
        # Shared node: already expanded elsewhere in this tree.
        return [state]
    options = _options(symbol, framework)
    if not options:
        # Dangling leaf; the tree stays potential-only.
        return [state]
    out: list[_State] = []
    for option in options:
        st = state.fork()
        st.choice[symbol] = option
        if option is ASSUMPTION_LEAF:
            out.append(st)
            continue
        rule = framework.rules[option]
        if rule.is_ground_truth():
            st.edges.append((symbol, TAU))
            out.append(st)
            continue
        frontier = [st]
        for supporter in rule.body:
            for s in frontier:
                if (symbol, supporter) not in s.edges:
                    s.edges.append((symbol, supporter))
            if supporter in path:
                # Loop onto the current derivation path: stop this branch.
                for s in frontier:
                    s.is_cyclic = True
                break
            frontier = [
                nxt
                for s in frontier
                for nxt in _expand(supporter, path + (supporter,), s, framework)
            ]
        out.extend(frontier)
    return out


def _finish_tree(root_symbol: str, state: _State, framework: Framework) -> ArgumentTree:
    nodes = {root_symbol}
    for a, b in state.edges:
        nodes.add(a)
        nodes.add(b)
    tree = ArgumentTree(
        root_symbol=root_symbol,
        nodes=frozenset(nodes),
        edges=frozenset(state.edges),
        rule_choice=dict(state.choice),
        is_cyclic=state.is_cyclic,
        assumption_set=frozenset(),
    )
    tree.assumption_set = assumption_set(tree, framework)
    return tree


def assumption_set(tree: ArgumentTree, framework: Framework) -> frozenset[str]:
    """Leaf labels that are assumptions."""
    return frozenset(n for n in tree.leaves() if n in framework.assumptions)


def is_actual_argument(tree: ArgumentTree, framework: Framework) -> bool:
    """Acyclic and every leaf labelled by tau or an assumption."""
    if tree.is_cyclic:
        return False
    return all(
        leaf == TAU or leaf in framework.assumptions for leaf in tree.leaves()
    )


def build_all_families(
    framework: Framework, max_trees: int = MAX_ARGUMENT_TREES
) -> dict[str, ArgumentFamily]:
    """One family per symbol of the language, in sorted symbol order."""
    return {
        symbol: build_argument_family(symbol, framework, max_trees)
        for symbol in sorted(framework.symbols)
    }
