"""Core framework model: the tuple of language, rules, assumptions and contraries."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

# Ground-truth marker. Not alphanumeric, so it can never collide with a symbol.
TAU = "τ"

_SYMBOL_RE = re.compile(r"[A-Za-z0-9]+\Z")


def is_valid_symbol(name: str) -> bool:
    """A symbol is a non-empty alphanumeric token distinct from the tau marker."""
    return bool(_SYMBOL_RE.match(name)) and name != TAU


@dataclass(frozen=True)
class Rule:
    """One inference rule ``head <- body``. An empty body denotes a ground truth."""

    body: tuple[str, ...]
    head: str

    def is_ground_truth(self) -> bool:
        return len(self.body) == 0


def is_ground_truth(rule: Rule) -> bool:
    return rule.is_ground_truth()


@dataclass(frozen=True)
class ValidationError:
    kind: str
    symbol: str
    message: str


def missing_contrary(symbol: str) -> ValidationError:
    return ValidationError(
        kind="missing-contrary",
        symbol=symbol,
        message=f"assumption '{symbol}' has no contrary",
    )


@dataclass(frozen=True)
class Framework:
    """An assumption-based argumentation framework.

    ``contraries`` maps each assumption to the single symbol whose derivation
    attacks it.  Identical duplicate rules are dropped at construction; rule
    order is otherwise preserved because it fixes branching order downstream.
    """

    symbols: frozenset[str] = frozenset()
    rules: tuple[Rule, ...] = ()
    assumptions: frozenset[str] = frozenset()
    contraries: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        deduped: list[Rule] = []
        seen: set[Rule] = set()
        for rule in self.rules:
            if rule not in seen:
                seen.add(rule)
                deduped.append(rule)
        object.__setattr__(self, "rules", tuple(deduped))

    def rules_for(self, head: str) -> list[tuple[int, Rule]]:
        return [(i, r) for i, r in enumerate(self.rules) if r.head == head]


def infer_assumptions(framework: Framework) -> Framework:
    """Union the declared assumptions with every contrary key."""
    inferred = frozenset(framework.assumptions) | frozenset(framework.contraries)
    return replace(framework, assumptions=inferred)


def infer_symbols(framework: Framework) -> Framework:
    """Collect every symbol occurring in rules, assumptions or contraries."""
    symbols: set[str] = set(framework.symbols)
    for rule in framework.rules:
        symbols.add(rule.head)
        symbols.update(rule.body)
    symbols.update(framework.assumptions)
    for assumption, attacker in framework.contraries.items():
        symbols.add(assumption)
        symbols.add(attacker)
    return replace(framework, symbols=frozenset(symbols))


def validate(framework: Framework) -> list[ValidationError]:
    """Every assumption must have exactly one contrary; report each one missing."""
    return [
        missing_contrary(a)
        for a in sorted(framework.assumptions)
        if a not in framework.contraries
    ]
