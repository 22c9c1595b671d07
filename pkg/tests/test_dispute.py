import pytest

from abasolve.arguments import build_all_families
from abasolve.dispute import (
    OPPONENT,
    PROPONENT,
    ArgumentRef,
    Branch,
    CopyStrategy,
    DisputeEngine,
    DisputeTree,
    EngineConfig,
    _advance,
    add_status,
    copy_branch,
)
from abasolve.dsl import parse_framework
from abasolve.errors import BranchLimitExceeded, DepthLimitExceeded

from conftest import load_fixture


def engine_for(text: str, **config_kwargs) -> DisputeEngine:
    fw = parse_framework(text)
    return DisputeEngine(fw, build_all_families(fw), EngineConfig(**config_kwargs))


def first_actual_ref(engine: DisputeEngine, claim: str) -> ArgumentRef:
    index = engine.families[claim].is_actual.index(True)
    return ArgumentRef(claim, index)


def test_unattacked_root_is_grounded_and_admissible():
    engine = engine_for("|- p.\n")
    trees = engine.construct_dispute_trees(ArgumentRef("p", 0))
    assert len(trees) == 1
    tree = trees[0]
    assert tree.nodes == {ArgumentRef("p", 0)}
    assert tree.edges == []
    assert tree.status == {ArgumentRef("p", 0): PROPONENT}
    assert tree.is_grounded and tree.is_admissible


def test_terminating_opponent_keeps_grounded():
    # b attacks a; nothing counters b, so the dispute stops after one exchange
    engine = engine_for(load_fixture("ex4.aba"))
    ref_a = first_actual_ref(engine, "a")
    (tree,) = engine.construct_dispute_trees(ref_a)
    b = ArgumentRef("b", 0)
    assert tree.status[b] == OPPONENT
    assert tree.is_grounded and tree.is_admissible


def test_infinity_detection_clears_grounded():
    # a <-> b attack cycle: the history repeats, so neither side settles
    engine = engine_for(load_fixture("ex3.aba"))
    ref_a = first_actual_ref(engine, "a")
    trees = engine.construct_dispute_trees(ref_a)
    assert all(not t.is_grounded for t in trees)
    assert any(t.is_admissible for t in trees)


def test_status_conflict_clears_admissible():
    # the contrary triangle forces one argument into both roles
    engine = engine_for(load_fixture("ex1.aba"))
    trees = engine.construct_dispute_trees(first_actual_ref(engine, "a"))
    assert all(not t.is_admissible for t in trees)
    assert all(not t.is_grounded for t in trees)


def test_opponent_choice_spawns_alternative_trees():
    # each opponent can be countered by either m-argument, so the decision
    # odometer enumerates several dispute trees for r
    engine = engine_for(load_fixture("shared_cache.aba"), stop_on_grounded=False)
    trees = engine.construct_dispute_trees(first_actual_ref(engine, "r"))
    assert len(trees) > 1
    assert sum(1 for t in trees if t.is_grounded) == 1
    roots = {t.root for t in trees}
    assert roots == {first_actual_ref(engine, "r")}


def test_stop_on_grounded_halts_enumeration():
    engine = engine_for(load_fixture("shared_cache.aba"))
    trees = engine.construct_dispute_trees(first_actual_ref(engine, "r"))
    assert trees[-1].is_grounded
    assert all(not t.is_grounded for t in trees[:-1])
    more = engine_for(
        load_fixture("shared_cache.aba"), stop_on_grounded=False
    ).construct_dispute_trees(first_actual_ref(engine, "r"))
    assert len(more) >= len(trees)


def test_branch_limit_raises():
    engine = engine_for(load_fixture("bomb.aba"), max_branch=8)
    with pytest.raises(BranchLimitExceeded):
        engine.construct_dispute_trees(first_actual_ref(engine, "a"))


def test_depth_limit_raises():
    engine = engine_for(load_fixture("ex3.aba"), max_depth=1)
    with pytest.raises(DepthLimitExceeded):
        engine.construct_dispute_trees(first_actual_ref(engine, "a"))


def test_config_rejects_nonpositive_limits():
    with pytest.raises(ValueError):
        EngineConfig(max_branch=0)
    with pytest.raises(ValueError):
        EngineConfig(max_depth=0)


def test_cache_hits_on_shared_subdispute():
    engine = engine_for(load_fixture("shared_cache.aba"))
    engine.construct_dispute_trees(first_actual_ref(engine, "r"))
    assert engine.cache_hits >= 1


def test_cache_disabled_records_no_hits():
    engine = engine_for(load_fixture("shared_cache.aba"), use_cache=False)
    engine.construct_dispute_trees(first_actual_ref(engine, "r"))
    assert engine.cache_hits == 0
    assert engine.cache == {}


@pytest.mark.parametrize("fixture", ["ex1.aba", "ex3.aba", "mutual_cycle3.aba",
                                     "two_attackers.aba", "shared_cache.aba"])
def test_cache_never_changes_verdicts(fixture):
    def verdicts(use_cache):
        engine = engine_for(load_fixture(fixture), use_cache=use_cache,
                            stop_on_grounded=False)
        out = []
        for claim in sorted(engine.families):
            family = engine.families[claim]
            for i, actual in enumerate(family.is_actual):
                if not actual:
                    continue
                trees = engine.construct_dispute_trees(ArgumentRef(claim, i))
                out.append((claim, i,
                            any(t.is_admissible for t in trees),
                            any(t.is_grounded for t in trees)))
        return out

    assert verdicts(True) == verdicts(False)


@pytest.mark.parametrize("strategy", list(CopyStrategy))
def test_copy_branch_is_deep(strategy):
    ref = ArgumentRef("a", 0)
    branch = Branch(root=ref, nodes={ref}, edges=[(ref, ref)],
                    status={ref: PROPONENT}, pairs_seen=frozenset())
    replica = copy_branch(branch, strategy)
    assert replica == branch
    replica.nodes.add(ArgumentRef("b", 0))
    replica.status[ref] = OPPONENT
    assert branch.nodes == {ref}
    assert branch.status[ref] == PROPONENT


def test_add_status_conflict_marks_inadmissible():
    ref = ArgumentRef("a", 0)
    tree = DisputeTree(root=ref)
    add_status(ref, PROPONENT, tree)
    assert tree.is_admissible
    add_status(ref, PROPONENT, tree)
    assert tree.is_admissible
    add_status(ref, OPPONENT, tree)
    assert not tree.is_admissible
    assert tree.status[ref] == OPPONENT


def test_advance_walks_all_combinations():
    # simulate the engine: _advance yields the next prefix, the regrown tree
    # fills the remaining decision points with 0
    alternatives = [2, 3]
    choices = [0, 0]
    seen = [tuple(choices)]
    while True:
        choices = _advance(choices, alternatives[: len(choices)])
        if choices is None:
            break
        choices += [0] * (2 - len(choices))
        seen.append(tuple(choices))
    assert seen == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


def test_debug_output_mentions_infinite_branch(capsys):
    engine = engine_for(load_fixture("ex3.aba"), debug_output=True)
    engine.construct_dispute_trees(first_actual_ref(engine, "a"))
    assert "infinite branch" in capsys.readouterr().err
