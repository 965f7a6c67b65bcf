"""Turn mined rules into a ranked course recommendation for one student.

Pipeline: drop rules whose antecedent the student has not fully passed,
strip already-passed courses from the surviving consequents (dropping rules
whose consequent empties), rank by confidence, and read suggested courses
off the consequents in rank order, first (best) occurrence wins.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .apriori import AssociationRule, MiningParams, generate_rules, mine_frequent, rule_sort_key
from .ingest import (
    DEFAULT_GRADE_THRESHOLD,
    Enrollment,
    StudentProfile,
    build_profile,
    build_transactions,
)
from .rationals import format_fraction, percent_half_up


@dataclass(frozen=True)
class Suggestion:
    """A recommended course and the best surviving rule backing it."""

    course_id: str
    confidence: Fraction
    best_rule: AssociationRule

    def __post_init__(self):
        if self.confidence != self.best_rule.confidence:
            raise ValueError("suggestion confidence must match its backing rule")


@dataclass(frozen=True)
class AdviceReport:
    student_id: str
    params: MiningParams
    kept_rules: tuple[AssociationRule, ...]
    suggestions: tuple[Suggestion, ...]


def filter_rules(
    rules: Sequence[AssociationRule], profile: StudentProfile
) -> list[AssociationRule]:
    """Filter and rewrite mined rules against a student's passed courses.

    A rule is deleted when its antecedent names a course the student has
    not passed; otherwise every passed course is removed from its
    consequent, and the rule is deleted if the consequent empties. Support
    and confidence are kept from the original rule. Rules identical after
    rewriting collapse to the highest-confidence instance.
    """
    passed = profile.passed_courses
    kept: dict[tuple[tuple[str, ...], tuple[str, ...]], AssociationRule] = {}
    for rule in rules:
        if not passed.issuperset(rule.antecedent):
            continue
        consequent = tuple(c for c in rule.consequent if c not in passed)
        if not consequent:
            continue
        rewritten = replace(rule, consequent=consequent)
        key = (rewritten.antecedent, rewritten.consequent)
        current = kept.get(key)
        if current is None or (rewritten.confidence, rewritten.support) > (
            current.confidence,
            current.support,
        ):
            kept[key] = rewritten
    return list(kept.values())


def rank_rules(rules: Sequence[AssociationRule]) -> list[AssociationRule]:
    """Sort by confidence desc, then support desc, then sides lexicographically."""
    return sorted(rules, key=rule_sort_key)


def extract_suggestions(
    ranked: Sequence[AssociationRule], profile: StudentProfile
) -> list[Suggestion]:
    """Walk ranked rules and suggest each consequent course once, at its best rule.

    Expects rules already filtered against the profile and sorted by
    rank_rules, so the first rule mentioning a course is its best one.
    """
    suggestions: list[Suggestion] = []
    seen: set[str] = set()
    for rule in ranked:
        for course in rule.consequent:
            if course in seen or course in profile.passed_courses:
                continue
            seen.add(course)
            suggestions.append(Suggestion(course, rule.confidence, rule))
    return suggestions


def recommend(
    rules: Sequence[AssociationRule], profile: StudentProfile
) -> tuple[list[AssociationRule], list[Suggestion]]:
    """Filter + rank + extract: the per-student half of the pipeline."""
    kept = rank_rules(filter_rules(rules, profile))
    return kept, extract_suggestions(kept, profile)


def advise(
    records: Sequence[Enrollment],
    student_id: str,
    params: MiningParams,
    grade_threshold: int = DEFAULT_GRADE_THRESHOLD,
) -> AdviceReport:
    """Advise one student end to end from raw records.

    Builds the student's profile, mines the transaction database of their
    major, generates rules, and filters them down to a ranked suggestion
    list. An empty database (no passing enrollments in the major) yields an
    empty report, not an error; an unknown student raises.
    """
    profile = build_profile(records, student_id, grade_threshold)
    db = build_transactions(records, profile.major, grade_threshold)
    rules: list[AssociationRule] = []
    if db.transactions:
        fis = mine_frequent(db, params)
        rules = generate_rules(fis, params, len(db.transactions))
    return _build_report(student_id, params, rules, profile)


def advise_with_rules(
    records: Sequence[Enrollment],
    student_id: str,
    params: MiningParams,
    rules: Sequence[AssociationRule],
    grade_threshold: int = DEFAULT_GRADE_THRESHOLD,
) -> AdviceReport:
    """Advise against pre-mined rules instead of re-mining the records."""
    profile = build_profile(records, student_id, grade_threshold)
    return _build_report(student_id, params, rules, profile)


def _build_report(
    student_id: str,
    params: MiningParams,
    rules: Sequence[AssociationRule],
    profile: StudentProfile,
) -> AdviceReport:
    kept, suggestions = recommend(rules, profile)
    return AdviceReport(student_id, params, tuple(kept), tuple(suggestions))


def rule_to_dict(rule: AssociationRule) -> dict:
    return {
        "antecedent": list(rule.antecedent),
        "consequent": list(rule.consequent),
        "support": format_fraction(rule.support),
        "confidence": format_fraction(rule.confidence),
        "confidence_pct": percent_half_up(rule.confidence),
    }


def suggestion_to_dict(suggestion: Suggestion) -> dict:
    return {
        "course_id": suggestion.course_id,
        "confidence": format_fraction(suggestion.confidence),
        "confidence_pct": percent_half_up(suggestion.confidence),
        "best_rule": rule_to_dict(suggestion.best_rule),
    }


def report_to_dict(report: AdviceReport) -> dict:
    """The structured (machine-readable) form of an AdviceReport."""
    return {
        "student_id": report.student_id,
        "params": {
            "min_support": format_fraction(report.params.min_support),
            "min_confidence": format_fraction(report.params.min_confidence),
            "max_itemset_len": report.params.max_itemset_len,
        },
        "kept_rules": [rule_to_dict(rule) for rule in report.kept_rules],
        "suggestions": [suggestion_to_dict(s) for s in report.suggestions],
    }
