import random
from pathlib import Path

import pytest

from abasolve.model import Framework, Rule, infer_symbols

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def load_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def random_framework(rng: random.Random) -> Framework:
    """Small random framework: <=6 symbols, <=6 rules, <=3 assumptions."""
    symbols = list("abcdef"[: rng.randint(2, 6)])
    assumptions = rng.sample(symbols, rng.randint(1, min(3, len(symbols))))
    contraries = {a: rng.choice(symbols) for a in assumptions}
    rules = []
    for _ in range(rng.randint(0, 6)):
        head = rng.choice(symbols)
        body = tuple(rng.sample(symbols, rng.randint(0, min(3, len(symbols)))))
        rules.append(Rule(body=body, head=head))
    framework = Framework(
        rules=tuple(rules),
        assumptions=frozenset(assumptions),
        contraries=dict(contraries),
    )
    return infer_symbols(framework)


def framework_to_dsl(framework: Framework) -> str:
    from abasolve.dsl import serialize_framework

    return serialize_framework(framework)
