"""Remainder families, partial sums and negation sets.

Families are enumerated over the subset lattice of the anchor base with
bitmask indices: subset ``s`` of ``K`` holds ``K[i]`` iff bit ``i`` of
``s`` is set.  "Good" subsets (those that do not imply the input) form a
down-set, so a good subset is maximal iff no one-element extension is
good.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .logic import (
    TOP, BeliefBase, CapacityError, Formula, Semantics, current_caps,
    disjunction_of, negate,
)

__all__ = [
    "FamilyKind", "SubsetFamily", "NegationSet", "package_remainders",
    "choice_remainders", "partial_sums", "negation_set",
    "choice_remainders_vs_negation", "package_remainders_vs_negation",
    "upper_bound_witness", "PreconditionError",
]


class PreconditionError(ValueError):
    """An operation was called outside its precondition."""


class FamilyKind(enum.Enum):
    PACKAGE = "package"
    CHOICE = "choice"
    PARTIAL_SUM = "partial-sum"


@dataclass(frozen=True)
class SubsetFamily:
    """A finite family of belief bases computed from ``anchor``."""

    anchor: BeliefBase
    members: frozenset[BeliefBase]
    kind: FamilyKind

    def __iter__(self) -> Iterator[BeliefBase]:
        return iter(sorted(self.members, key=_family_order))

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __contains__(self, base: object) -> bool:
        return base in self.members

    def as_lists(self) -> list[list[str]]:
        """Sorted list of sorted formula-string lists (the JSON form)."""
        return sorted(sorted(m.texts()) for m in self.members)

    def same_members(self, other: SubsetFamily) -> bool:
        return self.members == other.members

    def core(self) -> BeliefBase:
        """Intersection of all members (empty base for an empty family)."""
        if not self.members:
            return BeliefBase()
        it = iter(self.members)
        acc = next(it)
        for m in it:
            acc = acc & m
        return acc

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self) + "}"


def _family_order(base: BeliefBase):
    return (len(base), base.sort_key())


@dataclass(frozen=True)
class NegationSet:
    """Finite representative of the negation set of ``source``.

    One clause per nonempty subset of ``source``: the left-nested
    disjunction of the negated members in canonical order.  An empty
    source gives the single clause ``true``.
    """

    source: BeliefBase
    clauses: BeliefBase

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)


# ---------------------------------------------------------------------------
# enumeration helpers

def _check_base_cap(base: BeliefBase) -> None:
    cap = current_caps().remainder_base
    if len(base) > cap:
        raise CapacityError(f"base of size {len(base)} exceeds enumeration cap {cap}")


def _subset_models(sem: Semantics, formulas: tuple[Formula, ...]) -> list[int]:
    """Models of every subset of ``formulas``, indexed by subset bitmask."""
    tables = [sem.table(f) for f in formulas]
    models = [sem.full] * (1 << len(formulas))
    for s in range(1, len(models)):
        low = s & -s
        models[s] = models[s ^ low] & tables[low.bit_length() - 1]
    return models


def _maximal_good(formulas: tuple[Formula, ...], good: list[bool]) -> list[BeliefBase]:
    n = len(formulas)
    out = []
    for s, ok in enumerate(good):
        if not ok:
            continue
        if all(s >> i & 1 or not good[s | 1 << i] for i in range(n)):
            out.append(BeliefBase(formulas[i] for i in range(n) if s >> i & 1))
    return out


def _remainders(K: BeliefBase, extra: list, kind: FamilyKind,
                is_good: Callable[[Semantics, int], bool]) -> SubsetFamily:
    _check_base_cap(K)
    formulas = K.formulas
    sem = Semantics(formulas, *extra)
    good = [is_good(sem, m) for m in _subset_models(sem, formulas)]
    members = _maximal_good(formulas, good)
    return SubsetFamily(K, frozenset(members), kind)


# ---------------------------------------------------------------------------
# public operations

def package_remainders(K: BeliefBase, A: BeliefBase) -> SubsetFamily:
    """Maximal subsets of ``K`` that imply no member of ``A``."""
    targets = list(A)

    def good(sem, m):
        return not any(sem.entails(m, a) for a in targets)

    return _remainders(K, [targets], FamilyKind.PACKAGE, good)


def choice_remainders(K: BeliefBase, A: BeliefBase) -> SubsetFamily:
    """Maximal subsets of ``K`` that fail to imply some member of ``A``."""
    targets = list(A)

    def good(sem, m):
        return not all(sem.entails(m, a) for a in targets)

    return _remainders(K, [targets], FamilyKind.CHOICE, good)


def choice_remainders_vs_negation(K: BeliefBase, A: BeliefBase) -> SubsetFamily:
    """Choice remainders of ``K`` against the negation set of ``A``.

    ``X`` fails to imply every clause iff ``X`` is consistent with some
    single member of ``A``, so no clause is ever built.
    """
    if not A:
        return choice_remainders(K, BeliefBase([TOP]))
    inputs = list(A)

    def good(sem, m):
        return any(m & sem.table(a) for a in inputs)

    return _remainders(K, [inputs], FamilyKind.CHOICE, good)


def package_remainders_vs_negation(K: BeliefBase, A: BeliefBase) -> SubsetFamily:
    """Package remainders of ``K`` against the negation set of ``A``.

    ``X`` implies no clause iff ``X`` together with all of ``A`` is
    consistent.
    """
    if not A:
        return package_remainders(K, BeliefBase([TOP]))
    inputs = list(A)

    def good(sem, m):
        return m & sem.models(inputs) != 0

    return _remainders(K, [inputs], FamilyKind.PACKAGE, good)


def partial_sums(K: BeliefBase, A: BeliefBase) -> SubsetFamily:
    """All ``X`` with ``K <= X <= K | A`` that share a member with ``A``."""
    new = (A - K).formulas
    cap = current_caps().partial_sum
    if len(new) > cap:
        raise CapacityError(f"{len(new)} new input formulas exceed partial-sum cap {cap}")
    if not A:
        return SubsetFamily(K, frozenset(), FamilyKind.PARTIAL_SUM)
    overlap = not K.isdisjoint(A)
    members = []
    for r in range(0 if overlap else 1, len(new) + 1):
        for extra in itertools.combinations(new, r):
            members.append(K | BeliefBase(extra))
    return SubsetFamily(K, frozenset(members), FamilyKind.PARTIAL_SUM)


def negation_set(A: BeliefBase) -> NegationSet:
    if not A:
        return NegationSet(A, BeliefBase([TOP]))
    cap = current_caps().negation
    if len(A) > cap:
        raise CapacityError(f"negation set source of size {len(A)} exceeds cap {cap}")
    members = A.formulas
    clauses = []
    for r in range(1, len(members) + 1):
        for subset in itertools.combinations(members, r):
            clauses.append(disjunction_of([negate(f) for f in subset]))
    return NegationSet(A, BeliefBase(clauses))


def upper_bound_witness(K: BeliefBase, K_sub: BeliefBase, A: BeliefBase,
                        kind: FamilyKind) -> BeliefBase:
    """A remainder of ``K`` by ``A`` containing ``K_sub``.

    Built greedily: members of ``K`` are added in canonical order whenever
    the non-implication survives.
    """
    if kind not in (FamilyKind.PACKAGE, FamilyKind.CHOICE):
        raise ValueError(f"no upper bound property for {kind}")
    if not K_sub <= K:
        raise PreconditionError("K_sub must be a subset of K")
    targets = list(A)
    sem = Semantics(K, targets)
    implies = any if kind is FamilyKind.PACKAGE else all

    def bad(models: int) -> bool:
        return implies(sem.entails(models, a) for a in targets)

    current = K_sub
    if bad(sem.models(current)):
        raise PreconditionError(f"{K_sub} already implies the input ({kind.value})")
    for f in K:
        if f in current:
            continue
        candidate = current | BeliefBase([f])
        if not bad(sem.models(candidate)):
            current = candidate
    return current
