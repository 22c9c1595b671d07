"""Line-oriented DSL front-end.

Three expression forms, one per line:

    s1, ..., sm |- c.      inference rule (m >= 0; ``|- c.`` is a ground truth)
    contrary(a, b).        contrary of a is b; implicitly declares a as assumption
    assumption(a).         explicit assumption declaration

Blank lines are skipped.  Anything else yields a ParseError; parsing never
raises, it keeps going and collects errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .model import (
    Framework,
    Rule,
    ValidationError,
    infer_assumptions,
    infer_symbols,
    is_valid_symbol,
    validate,
)

MAX_INPUT_BYTES = 1 << 20

_CONTRARY_RE = re.compile(r"contrary\s*\(\s*([^(),\s]+)\s*,\s*([^(),\s]+)\s*\)\Z")
_ASSUMPTION_RE = re.compile(r"assumption\s*\(\s*([^(),\s]+)\s*\)\Z")


@dataclass(frozen=True)
class ParseError:
    line_number: int
    message: str
    offending_text: str


@dataclass
class ParseResult:
    parsed_rules: list[Rule] = field(default_factory=list)
    parsed_contraries: dict[str, str] = field(default_factory=dict)
    parsed_assumptions: set[str] = field(default_factory=set)
    errors: list[ParseError] = field(default_factory=list)


class FrameworkInvalid(Exception):
    """Raised by construct_framework when validation fails."""

    def __init__(self, errors: list[ValidationError]):
        super().__init__("; ".join(e.message for e in errors))
        self.errors = errors


def parse(raw: str) -> ParseResult:
    result = ParseResult()
    if len(raw.encode("utf-8", errors="replace")) > MAX_INPUT_BYTES:
        result.errors.append(ParseError(1, "input exceeds 1 MiB limit", ""))
        return result
    for lineno, line in enumerate(raw.splitlines(), start=1):
        text = line.strip()
        if not text:
            continue
        _parse_line(lineno, text, result)
    return result


def _parse_line(lineno: int, text: str, result: ParseResult) -> None:
    def err(message: str) -> None:
        result.errors.append(ParseError(lineno, message, text))

    if not text.endswith("."):
        err("missing terminating period")
        return
    body_text = text[:-1].strip()

    m = _CONTRARY_RE.match(body_text)
    if m:
        assumption, attacker = m.group(1), m.group(2)
        for sym in (assumption, attacker):
            if not is_valid_symbol(sym):
                err(f"illegal symbol '{sym}'")
                return
        previous = result.parsed_contraries.get(assumption)
        if previous is not None and previous != attacker:
            err(
                f"conflicting contrary for '{assumption}': "
                f"already '{previous}', now '{attacker}'"
            )
            return
        result.parsed_contraries[assumption] = attacker
        result.parsed_assumptions.add(assumption)
        return

    m = _ASSUMPTION_RE.match(body_text)
    if m:
        sym = m.group(1)
        if not is_valid_symbol(sym):
            err(f"illegal symbol '{sym}'")
            return
        result.parsed_assumptions.add(sym)
        return

    if body_text.startswith(("contrary", "assumption")):
        err("malformed contrary/assumption expression")
        return

    if "|-" in body_text:
        lhs, _, rhs = body_text.partition("|-")
        head = rhs.strip()
        if not head:
            err("empty claim")
            return
        if not is_valid_symbol(head):
            err(f"illegal claim symbol '{head}'")
            return
        lhs = lhs.strip()
        body: list[str] = []
        if lhs:
            for token in lhs.split(","):
                token = token.strip()
                if not is_valid_symbol(token):
                    err(f"illegal body symbol '{token}'")
                    return
                body.append(token)
        result.parsed_rules.append(Rule(body=tuple(body), head=head))
        return

    err("unrecognized expression")


def construct_framework(result: ParseResult) -> Framework:
    """Build and validate a Framework from an error-free parse."""
    framework = Framework(
        rules=tuple(result.parsed_rules),
        assumptions=frozenset(result.parsed_assumptions),
        contraries=dict(result.parsed_contraries),
    )
    framework = infer_assumptions(framework)
    framework = infer_symbols(framework)
    errors = validate(framework)
    if errors:
        raise FrameworkInvalid(errors)
    return framework


def parse_framework(raw: str) -> Framework:
    """Convenience wrapper: parse then construct; raises on any failure."""
    result = parse(raw)
    if result.errors:
        raise FrameworkInvalid(
            [ValidationError("parse", "", e.message) for e in result.errors]
        )
    return construct_framework(result)


def serialize_framework(framework: Framework) -> str:
    """Emit DSL text that reparses to an equivalent framework."""
    lines = [
        (", ".join(rule.body) + " |- " if rule.body else "|- ") + rule.head + "."
        for rule in framework.rules
    ]
    lines += [f"assumption({a})." for a in sorted(framework.assumptions)]
    lines += [
        f"contrary({a}, {framework.contraries[a]})."
        for a in sorted(framework.contraries)
    ]
    return "\n".join(lines) + ("\n" if lines else "")
