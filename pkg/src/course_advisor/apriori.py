"""Level-wise frequent-itemset mining and association-rule generation.

Classic Apriori: level k candidates are joined from frequent (k-1)-itemsets
sharing their first k-2 items, pruned by the downward-closure property, and
counted in a single database pass per level. Rules come from splitting each
frequent itemset into every (antecedent, consequent) pair that clears the
confidence threshold.

All support/confidence values are exact `Fraction`s; thresholds compare
inclusively (>=). Item order everywhere is lexicographic byte order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .ingest import TransactionDB
from .rationals import to_fraction

Items = tuple[str, ...]


def _check_sorted(items: Items, what: str) -> None:
    if any(a >= b for a, b in zip(items, items[1:])):
        raise ValueError(f"{what} must be strictly increasing: {items!r}")


@dataclass(frozen=True)
class Itemset:
    """A sorted set of items together with its transaction count."""

    items: Items
    support_count: int

    def __post_init__(self):
        if not self.items:
            raise ValueError("itemset must be non-empty")
        _check_sorted(self.items, "itemset items")
        if self.support_count < 0:
            raise ValueError("support_count must be >= 0")


@dataclass(frozen=True)
class MiningParams:
    """Thresholds for a mining run.

    min_support and min_confidence are fractions of the transaction count
    in (0, 1]; they accept Fraction, int, decimal or ratio strings, and
    floats (coerced through their decimal form, so 0.1 means exactly
    1/10). max_itemset_len optionally caps the itemset size.
    """

    min_support: Fraction
    min_confidence: Fraction
    max_itemset_len: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "min_support", to_fraction(self.min_support))
        object.__setattr__(self, "min_confidence", to_fraction(self.min_confidence))
        if not 0 < self.min_support <= 1:
            raise ValueError(f"min_support {self.min_support} outside (0, 1]")
        if not 0 < self.min_confidence <= 1:
            raise ValueError(f"min_confidence {self.min_confidence} outside (0, 1]")
        if self.max_itemset_len is not None and self.max_itemset_len < 1:
            raise ValueError("max_itemset_len must be >= 1")


@dataclass(frozen=True)
class AssociationRule:
    """antecedent -> consequent with exact support and confidence."""

    antecedent: Items
    consequent: Items
    support: Fraction
    confidence: Fraction

    def __post_init__(self):
        if not self.antecedent or not self.consequent:
            raise ValueError("rule sides must be non-empty")
        _check_sorted(self.antecedent, "antecedent")
        _check_sorted(self.consequent, "consequent")
        if set(self.antecedent) & set(self.consequent):
            raise ValueError("antecedent and consequent must be disjoint")
        if not 0 <= self.support <= self.confidence <= 1:
            raise ValueError(
                f"need 0 <= support <= confidence <= 1, "
                f"got support={self.support}, confidence={self.confidence}"
            )


def rule_sort_key(rule: AssociationRule):
    """Total order: confidence desc, support desc, antecedent, consequent."""
    return (-rule.confidence, -rule.support, rule.antecedent, rule.consequent)


class FrequentItemsets:
    """Mined frequent itemsets, grouped by size, with a support lookup."""

    def __init__(self, levels: Iterable[Iterable[Itemset]]):
        self.levels: tuple[tuple[Itemset, ...], ...] = tuple(
            tuple(level) for level in levels
        )
        for k, level in enumerate(self.levels, start=1):
            for itemset in level:
                if len(itemset.items) != k:
                    raise ValueError(f"level {k} holds a {len(itemset.items)}-itemset")
        self._counts: dict[Items, int] = {
            itemset.items: itemset.support_count
            for level in self.levels
            for itemset in level
        }

    def level(self, k: int) -> tuple[Itemset, ...]:
        """Frequent k-itemsets; empty beyond the deepest mined level."""
        if k < 1:
            raise ValueError("itemset size starts at 1")
        if k > len(self.levels):
            return ()
        return self.levels[k - 1]

    def support_count(self, items: Sequence[str]) -> int:
        return self._counts[tuple(items)]

    def __contains__(self, items: Sequence[str]) -> bool:
        return tuple(items) in self._counts

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self):
        for level in self.levels:
            yield from level


def count_support(
    candidates: Sequence[Sequence[str]], db: TransactionDB
) -> dict[Items, int]:
    """Count, in one pass over db, how many transactions contain each candidate.

    Candidates must be sorted in canonical order. Items absent from the
    database simply count 0.
    """
    counts: dict[Items, int] = {}
    for candidate in candidates:
        items = tuple(candidate)
        _check_sorted(items, "candidate")
        counts[items] = 0
    if not counts:
        return counts
    by_size: dict[int, tuple[set[Items], list[Items]]] = {}
    for items in counts:
        group = by_size.setdefault(len(items), (set(), []))
        group[0].add(items)
        group[1].append(items)
    for transaction in db.transactions:
        present = set(transaction.items)
        for size, (lookup, ordered) in by_size.items():
            if size > len(present):
                continue
            # Enumerating the transaction's own size-k subsets beats testing
            # every candidate when the transaction is short.
            if math.comb(len(present), size) <= len(ordered):
                for subset in combinations(transaction.items, size):
                    if subset in lookup:
                        counts[subset] += 1
            else:
                for items in ordered:
                    if present.issuperset(items):
                        counts[items] += 1
    return counts


def generate_candidates(frequent_prev: Sequence[Sequence[str]]) -> list[Items]:
    """Join and prune: candidate k-itemsets from frequent (k-1)-itemsets.

    Join merges every pair agreeing on the first k-2 items; prune drops any
    candidate with an infrequent (k-1)-subset. The input must be a
    duplicate-free, lexicographically sorted list of equally sized, sorted
    item tuples.
    """
    prev = [tuple(p) for p in frequent_prev]
    if not prev:
        return []
    size = len(prev[0])
    if size == 0:
        raise ValueError("cannot extend empty itemsets")
    for items in prev:
        if len(items) != size:
            raise ValueError("all input itemsets must have the same size")
        _check_sorted(items, "itemset")
    if any(a >= b for a, b in zip(prev, prev[1:])):
        raise ValueError("input itemsets must be sorted and duplicate-free")
    prev_set = set(prev)
    candidates: list[Items] = []
    for i, left in enumerate(prev):
        for right in prev[i + 1 :]:
            if left[:-1] != right[:-1]:
                break  # sorted input: no later right shares this prefix
            joined = left + (right[-1],)
            if all(subset in prev_set for subset in combinations(joined, size)):
                candidates.append(joined)
    return sorted(candidates)


def min_support_count(min_support: Fraction, db_size: int) -> int:
    """Smallest transaction count satisfying the support threshold."""
    return math.ceil(min_support * db_size)


def mine_frequent(db: TransactionDB, params: MiningParams) -> FrequentItemsets:
    """Mine all frequent itemsets of db, level by level.

    Level 1 filters the item universe; each later level counts the
    join/prune candidates in one database pass and keeps those meeting the
    support threshold. Stops on an empty level or at max_itemset_len.
    """
    if not db.transactions:
        return FrequentItemsets(())
    threshold = min_support_count(params.min_support, len(db.transactions))
    levels: list[list[Itemset]] = []
    candidates: list[Items] = [(item,) for item in db.item_universe]
    size = 1
    while candidates and (params.max_itemset_len is None or size <= params.max_itemset_len):
        counts = count_support(candidates, db)
        level = [
            Itemset(items, counts[items])
            for items in candidates
            if counts[items] >= threshold
        ]
        if not level:
            break
        levels.append(level)
        candidates = generate_candidates([itemset.items for itemset in level])
        size += 1
    return FrequentItemsets(levels)


def generate_rules(
    fis: FrequentItemsets, params: MiningParams, db_size: int
) -> list[AssociationRule]:
    """Emit every rule X -> F\\X over frequent F meeting min_confidence.

    Antecedents range over all nonempty proper subsets, so consequents may
    hold several items. Output is sorted by confidence desc, support desc,
    then lexicographically by sides.
    """
    rules: list[AssociationRule] = []
    for level in fis.levels[1:]:
        for itemset in level:
            support = Fraction(itemset.support_count, db_size)
            for split in range(1, len(itemset.items)):
                for antecedent in combinations(itemset.items, split):
                    confidence = Fraction(
                        itemset.support_count, fis.support_count(antecedent)
                    )
                    if confidence >= params.min_confidence:
                        consequent = tuple(
                            item for item in itemset.items if item not in antecedent
                        )
                        rules.append(
                            AssociationRule(antecedent, consequent, support, confidence)
                        )
    rules.sort(key=rule_sort_key)
    return rules
