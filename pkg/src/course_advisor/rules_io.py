"""Rule-file serialization.

One rule per line:

    <antecedent>--><consequent>-----<pct>%|support=<a>/<b>|confidence=<c>/<d>

with both sides comma-joined in canonical order, the percent a half-up
rounding of the confidence (display only), and the trailing fields the
exact rationals. parse(serialize(rules)) round-trips losslessly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .apriori import AssociationRule
from .errors import ParseError
from .rationals import format_fraction, percent_half_up

ARROW = "-->"
PCT_SEP = "-----"


def format_rule(rule: AssociationRule) -> str:
    for item in rule.antecedent + rule.consequent:
        if "," in item or ARROW in item or PCT_SEP in item or "|" in item:
            raise ValueError(f"course id {item!r} contains a rule-file separator")
    return (
        f"{','.join(rule.antecedent)}{ARROW}{','.join(rule.consequent)}"
        f"{PCT_SEP}{percent_half_up(rule.confidence)}%"
        f"|support={format_fraction(rule.support)}"
        f"|confidence={format_fraction(rule.confidence)}"
    )


def rules_to_text(rules: Sequence[AssociationRule]) -> str:
    return "".join(format_rule(rule) + "\n" for rule in rules)


def parse_rule_line(line: str, line_number: int | None = None) -> AssociationRule:
    parts = line.split("|")
    if len(parts) != 3:
        raise ParseError(f"expected 3 '|'-separated fields, got {len(parts)}", line_number)
    head, support_field, confidence_field = parts
    if ARROW not in head:
        raise ParseError(f"missing {ARROW!r} separator", line_number)
    antecedent_text, _, rest = head.partition(ARROW)
    consequent_text, sep, pct_text = rest.rpartition(PCT_SEP)
    if not sep or not pct_text.endswith("%") or not pct_text[:-1].isdigit():
        raise ParseError("missing or malformed percent field", line_number)
    support = _parse_labeled_fraction(support_field, "support", line_number)
    confidence = _parse_labeled_fraction(confidence_field, "confidence", line_number)
    try:
        return AssociationRule(
            tuple(antecedent_text.split(",")),
            tuple(consequent_text.split(",")),
            support,
            confidence,
        )
    except ValueError as exc:
        raise ParseError(str(exc), line_number) from None


def _parse_labeled_fraction(field: str, label: str, line_number: int | None) -> Fraction:
    prefix = f"{label}="
    if not field.startswith(prefix):
        raise ParseError(f"expected {prefix!r} field, got {field!r}", line_number)
    try:
        return Fraction(field[len(prefix) :])
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad {label} value: {exc}", line_number) from None


def parse_rules_text(source: str | Iterable[str]) -> list[AssociationRule]:
    """Parse a rule file given as one string or as an iterable of lines."""
    if isinstance(source, str):
        source = source.splitlines()
    rules: list[AssociationRule] = []
    for line_number, line in enumerate(source, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        rules.append(parse_rule_line(line, line_number))
    return rules
