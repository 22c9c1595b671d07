"""Per-argument semantics verdicts.

Conflict-free and stable are decided on the argument tree alone; complete
and ideal are decided on a dispute tree once admissibility and groundedness
are known for every argument.
"""

from __future__ import annotations

from .arguments import ArgumentFamily, ArgumentTree
from .dispute import OPPONENT, ArgumentRef, DisputeTree
from .model import Framework


def is_conflict_free(tree: ArgumentTree, framework: Framework) -> bool:
    """False iff some contrary pair has both symbols among the tree's nodes."""
    for assumption, attacker in framework.contraries.items():
        if attacker in tree.nodes and assumption in tree.nodes:
            return False
    return True


def is_stable(tree: ArgumentTree, framework: Framework) -> bool:
    """Conflict-free, and every absent assumption's attacker is present."""
    if not is_conflict_free(tree, framework):
        return False
    for assumption, attacker in framework.contraries.items():
        if assumption not in tree.nodes and attacker not in tree.nodes:
            return False
    return True


def attackable_arguments(
    arg: ArgumentRef,
    framework: Framework,
    families: dict[str, ArgumentFamily],
) -> list[ArgumentRef]:
    """Actual arguments holding an assumption whose contrary is this claim."""
    out: list[ArgumentRef] = []
    for symbol in sorted(families):
        family = families[symbol]
        for index, tree in enumerate(family.trees):
            if not family.is_actual[index]:
                continue
            if any(
                framework.contraries.get(y) == arg.claim
                for y in tree.assumption_set
            ):
                out.append(ArgumentRef(symbol, index))
    return out


def is_complete_full(
    dtree: DisputeTree,
    framework: Framework,
    families: dict[str, ArgumentFamily],
) -> bool:
    """The unshortcut evaluation: every defendable claim inside the root tree."""
    if not dtree.is_admissible:
        return False
    root_tree = families[dtree.root.claim].trees[dtree.root.tree_index]
    attackables = attackable_arguments(dtree.root, framework, families)
    defendables: list[ArgumentRef] = []
    for attackable in attackables:
        defendables.extend(attackable_arguments(attackable, framework, families))
    return all(d.claim in root_tree.nodes for d in defendables)


def is_complete(
    dtree: DisputeTree,
    framework: Framework,
    families: dict[str, ArgumentFamily],
) -> bool:
    if not dtree.is_admissible:
        return False
    if dtree.is_grounded:
        # Grounded and admissible guarantees complete.
        return True
    return is_complete_full(dtree, framework, families)


def is_ideal(
    dtree: DisputeTree,
    admissible_by_argument: dict[ArgumentRef, bool],
) -> bool:
    """Root admissible and no admissible opponent anywhere in the tree."""
    if not admissible_by_argument.get(dtree.root, False):
        return False
    for node, status in dtree.status.items():
        if status == OPPONENT and admissible_by_argument.get(node, False):
            return False
    return True
