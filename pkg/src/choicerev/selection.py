"""Deterministic selection over subset families.

Strategies look only at the family they are given; the anchor is used
solely when the family is empty.  Equal families therefore always yield
equal selections, which makes every strategy here unified for package,
choice and partial-sum families alike.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .logic import BeliefBase, Formula, Semantics, parse_formula
from .remainders import SubsetFamily

__all__ = [
    "PriorityOrder", "StrategyKind", "SelectionStrategy", "select",
    "meet_select", "union_select", "select_expansion_consistent",
]


@dataclass(frozen=True)
class PriorityOrder:
    """Entrenchment ranks; lower is preferred.

    Unlisted formulas come after every listed one, ordered by text.
    """

    weights: Mapping[Formula, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))

    @classmethod
    def from_sequence(cls, formulas: Iterable[Formula | str]) -> PriorityOrder:
        """Rank formulas by position, best first."""
        return cls({_f(f): i for i, f in enumerate(formulas)})

    def rank(self, f: Formula):
        if f in self.weights:
            return (0, self.weights[f], str(f))
        return (1, 0, str(f))

    def sorted(self, formulas: Iterable[Formula]) -> list[Formula]:
        return sorted(formulas, key=self.rank)

    def best(self, formulas: Iterable[Formula]) -> Formula:
        return min(formulas, key=self.rank)

    def __hash__(self):
        return hash(tuple(sorted((str(f), w) for f, w in self.weights.items())))

    def __eq__(self, other):
        if not isinstance(other, PriorityOrder):
            return NotImplemented
        return self.weights == other.weights


def _f(x) -> Formula:
    return parse_formula(x) if isinstance(x, str) else x


class StrategyKind(enum.Enum):
    FULL = "full"
    MAXICHOICE = "maxichoice"
    TOP_K = "topk"


@dataclass(frozen=True)
class SelectionStrategy:
    kind: StrategyKind = StrategyKind.FULL
    k: int = 1
    priority: PriorityOrder = field(default_factory=PriorityOrder)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")

    @classmethod
    def full(cls, priority: PriorityOrder | None = None) -> SelectionStrategy:
        return cls(StrategyKind.FULL, 1, priority or PriorityOrder())

    @classmethod
    def maxichoice(cls, priority: PriorityOrder | None = None) -> SelectionStrategy:
        return cls(StrategyKind.MAXICHOICE, 1, priority or PriorityOrder())

    @classmethod
    def top_k(cls, k: int, priority: PriorityOrder | None = None) -> SelectionStrategy:
        return cls(StrategyKind.TOP_K, k, priority or PriorityOrder())

    def with_priority(self, priority: PriorityOrder) -> SelectionStrategy:
        return SelectionStrategy(self.kind, self.k, priority)

    @property
    def label(self) -> str:
        if self.kind is StrategyKind.TOP_K:
            return f"topk{self.k}"
        return self.kind.value


def member_score(priority: PriorityOrder, member: BeliefBase, core: BeliefBase):
    """Sort key for a family member; smaller is better.

    Formulas shared by every member are ignored.  The rest are compared as
    rank-sorted sequences, lexicographically: holding the best-ranked
    formula wins, and a proper prefix beats its extensions.
    """
    ranks = tuple(sorted(priority.rank(f) for f in member if f not in core))
    return ranks, member.sort_key()


def _ranked(strategy: SelectionStrategy, family: SubsetFamily) -> list[BeliefBase]:
    core = family.core()
    return sorted(family.members, key=lambda m: member_score(strategy.priority, m, core))


def select(strategy: SelectionStrategy, anchor: BeliefBase,
           family: SubsetFamily) -> list[BeliefBase]:
    """Nonempty subfamily of a nonempty family; ``[anchor]`` otherwise."""
    if not family.members:
        return [anchor]
    if strategy.kind is StrategyKind.FULL:
        return list(family)
    ranked = _ranked(strategy, family)
    if strategy.kind is StrategyKind.MAXICHOICE:
        return ranked[:1]
    return ranked[:strategy.k]


def meet_select(strategy: SelectionStrategy, anchor: BeliefBase,
                family: SubsetFamily) -> BeliefBase:
    chosen = select(strategy, anchor, family)
    acc = chosen[0]
    for m in chosen[1:]:
        acc = acc & m
    return acc


def union_select(strategy: SelectionStrategy, anchor: BeliefBase,
                 family: SubsetFamily) -> BeliefBase:
    chosen = select(strategy, anchor, family)
    acc = chosen[0]
    for m in chosen[1:]:
        acc = acc | m
    return acc


def select_expansion_consistent(K: BeliefBase, A: BeliefBase,
                                priority: PriorityOrder) -> BeliefBase:
    """Consistency-preserving pick from the partial sums of ``K`` by ``A``.

    Picks the best consistent partial sum under :func:`member_score`, or
    the best partial sum outright when none is consistent.  Candidates
    are scanned directly instead of materialising the family.
    """
    if not A:
        return K
    new = priority.sorted(A - K)
    sem = Semantics(K, A)
    base_models = sem.models(K)
    overlap = not K.isdisjoint(A)
    if overlap and base_models:
        return K
    best = None
    for r in range(1, len(new) + 1):
        for extra in itertools.combinations(new, r):
            if base_models & sem.models(extra):
                key = tuple(priority.rank(f) for f in extra)
                if best is None or key < best[0]:
                    best = (key, extra)
    if best is not None:
        return K | BeliefBase(best[1])
    if overlap:
        return K
    return K | BeliefBase(new[:1])
