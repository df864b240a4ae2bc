"""Belief-change operators on finite belief bases.

All operators take an optional second strategy for their second stage;
by default one strategy drives both stages.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .logic import BeliefBase, Formula, Not
from .remainders import (
    choice_remainders, choice_remainders_vs_negation, package_remainders,
    package_remainders_vs_negation, partial_sums,
)
from .selection import SelectionStrategy, meet_select, select_expansion_consistent, union_select

__all__ = [
    "RevisionMode", "RevisionTrace", "package_contract", "choice_contract",
    "partial_expand", "consistent_expand", "internal_choice_revise",
    "external_choice_revise", "mum_input", "mum_internal", "mum_external",
]

_DEFAULT = SelectionStrategy.full()


class RevisionMode(enum.Enum):
    INTERNAL = "internal"
    EXTERNAL = "external"


@dataclass(frozen=True)
class RevisionTrace:
    """Both stages of a choice revision.

    Internal: ``stage1`` is the contraction of ``K`` by the negation set of
    the input and ``aux`` is empty.  External: ``stage1`` is the partial
    expansion and ``aux`` the part of it not already in ``K``.
    """

    mode: RevisionMode
    K: BeliefBase
    A: BeliefBase
    stage1: BeliefBase
    aux: BeliefBase
    result: BeliefBase

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "stage1": self.stage1.texts(),
            "aux": self.aux.texts(),
            "result": self.result.texts(),
        }


def package_contract(K: BeliefBase, A: BeliefBase,
                     strategy: SelectionStrategy = _DEFAULT) -> BeliefBase:
    return meet_select(strategy, K, package_remainders(K, A))


def choice_contract(K: BeliefBase, A: BeliefBase,
                    strategy: SelectionStrategy = _DEFAULT) -> BeliefBase:
    return meet_select(strategy, K, choice_remainders(K, A))


def partial_expand(K: BeliefBase, A: BeliefBase,
                   strategy: SelectionStrategy = _DEFAULT) -> BeliefBase:
    return union_select(strategy, K, partial_sums(K, A))


def consistent_expand(K: BeliefBase, A: BeliefBase,
                      strategy: SelectionStrategy = _DEFAULT) -> BeliefBase:
    """Consistency-preserving partial expansion driven by the strategy's priority."""
    return select_expansion_consistent(K, A, strategy.priority)


def internal_choice_revise(K: BeliefBase, A: BeliefBase,
                           strategy: SelectionStrategy = _DEFAULT,
                           expansion: SelectionStrategy | None = None) -> RevisionTrace:
    """Contract by the negation set of ``A``, then expand consistently by ``A``."""
    stage1 = meet_select(strategy, K, choice_remainders_vs_negation(K, A))
    result = select_expansion_consistent(stage1, A, (expansion or strategy).priority)
    return RevisionTrace(RevisionMode.INTERNAL, K, A, stage1, BeliefBase(), result)


def external_choice_revise(K: BeliefBase, A: BeliefBase,
                           strategy: SelectionStrategy = _DEFAULT,
                           contraction: SelectionStrategy | None = None) -> RevisionTrace:
    """Partially expand by ``A``, then package-contract by the negation set
    of whatever the expansion added."""
    stage1 = partial_expand(K, A, strategy)
    aux = stage1 - K
    family = package_remainders_vs_negation(stage1, aux)
    result = meet_select(contraction or strategy, stage1, family)
    return RevisionTrace(RevisionMode.EXTERNAL, K, A, stage1, aux, result)


def mum_input(phi: Formula) -> BeliefBase:
    """``{phi, ~phi}``, built syntactically (no double-negation removal)."""
    return BeliefBase([phi, Not(phi)])


def mum_internal(K: BeliefBase, phi: Formula,
                 strategy: SelectionStrategy = _DEFAULT) -> BeliefBase:
    return internal_choice_revise(K, mum_input(phi), strategy).result


def mum_external(K: BeliefBase, phi: Formula,
                 strategy: SelectionStrategy = _DEFAULT) -> BeliefBase:
    return external_choice_revise(K, mum_input(phi), strategy).result
