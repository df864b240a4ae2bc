"""One executable predicate per named postulate.

A predicate receives the operator under test as a closure and an
:class:`Instance`.  Set-input closures have the shape ``op(K, A)``;
making-up-one's-mind closures have the shape ``op(K, phi)``.  Observation
checks (suite ``OBS``) receive the instance's strategy instead.

Universal conditions over subsets are decided by enumerating the finite
lattice named in the postulate.  Conditions that quantify over a second
instance (uniformity, coincidence, redundancy) are tested against the
explicit ``B``/``K2``/``Z`` of the instance plus a small deterministic
candidate search, which gives falsification power rather than proof.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator

from ..logic import (
    BOTTOM, TOP, Atom, BeliefBase, Formula, Not, Semantics, conjunction_of,
    equivalent_sets, implies_all, implies_some, is_consistent, negate,
)
from ..operators import (
    choice_contract, consistent_expand, external_choice_revise,
    internal_choice_revise, mum_external, mum_input, mum_internal,
    package_contract, partial_expand,
)
from ..remainders import (
    FamilyKind, choice_remainders, choice_remainders_vs_negation, negation_set,
    package_remainders, package_remainders_vs_negation, partial_sums,
    upper_bound_witness,
)
from ..selection import SelectionStrategy

__all__ = [
    "Verdict", "Instance", "Outcome", "Postulate", "PostulateReport",
    "POSTULATES", "check_postulate", "make_operator", "recheck",
    "redundancy_candidates", "resolve_name",
]


class Verdict(enum.Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class Instance:
    """Inputs for one postulate check.

    ``B``, ``K2`` and ``Z`` are optional second inputs; when absent the
    predicates derive candidates themselves.  For making up one's mind the
    input sentence is the first member of ``A`` on which ``K`` takes a
    stance, else the first member of ``A`` (``true`` when ``A`` is empty);
    the second sentence is the first member of ``B``.
    """

    K: BeliefBase
    A: BeliefBase
    B: BeliefBase | None = None
    Z: BeliefBase | None = None
    strategy: SelectionStrategy = field(default_factory=SelectionStrategy.full)
    seed: int = 0
    index: int = 0
    K2: BeliefBase | None = None

    @property
    def phi(self) -> Formula:
        for f in self.A:
            if f in self.K or Not(f) in self.K:
                return f
        return self.A.formulas[0] if self.A else TOP

    @property
    def psi(self) -> Formula | None:
        return self.B.formulas[0] if self.B else None

    def to_json(self) -> dict:
        out = {"index": self.index, "seed": self.seed, "K": self.K.texts(), "A": self.A.texts()}
        for name in ("B", "Z", "K2"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value.texts()
        return out


@dataclass(frozen=True)
class Outcome:
    verdict: Verdict
    witness: dict | None = None
    detail: str = ""


@dataclass(frozen=True)
class PostulateReport:
    postulate: str
    instance: Instance
    verdict: Verdict
    witness: dict | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"postulate": self.postulate, "verdict": self.verdict.value,
               "instance": self.instance.to_json()}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Postulate:
    name: str
    target: str
    check: Callable[[Callable, Instance], Outcome]
    discrepancy: bool = False
    note: str = ""


HOLDS = Outcome(Verdict.HOLDS)


def _skip(detail: str) -> Outcome:
    return Outcome(Verdict.INAPPLICABLE, None, detail)


def _violated(detail: str, **witness) -> Outcome:
    return Outcome(Verdict.VIOLATED, {k: _jsonable(v) for k, v in witness.items()}, detail)


def _jsonable(value):
    if isinstance(value, BeliefBase):
        return value.texts()
    if isinstance(value, Formula):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _inputs(inst: Instance, **extra) -> dict:
    """Witness inputs; enough to rebuild an instance that re-violates."""
    out = {"K": inst.K, "A": inst.A}
    out.update({k: v for k, v in extra.items() if v is not None})
    return out


# ---------------------------------------------------------------------------
# lattice helpers

def _between(lower: BeliefBase, upper: BeliefBase) -> Iterator[BeliefBase]:
    free = (upper - lower).formulas
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            yield lower | BeliefBase(extra)


def _subsets(base: BeliefBase) -> Iterator[BeliefBase]:
    return _between(BeliefBase(), base)


def _consistent(*parts: Iterable[Formula]) -> bool:
    return is_consistent(itertools.chain(*parts))


def _consistent_subsets(carrier: BeliefBase, aux: BeliefBase) -> frozenset:
    """All ``X`` within ``carrier`` with ``X | aux`` consistent, by bitmask."""
    formulas = carrier.formulas
    sem = Semantics(formulas, aux)
    aux_models = sem.models(aux)
    tables = [sem.table(f) for f in formulas]
    models = [aux_models] * (1 << len(formulas))
    out = []
    for s in range(len(models)):
        if s:
            low = s & -s
            models[s] = models[s ^ low] & tables[low.bit_length() - 1]
        if models[s]:
            out.append(frozenset(formulas[i] for i in range(len(formulas)) if s >> i & 1))
    return frozenset(out)


def _equiv_bottom(A: BeliefBase) -> bool:
    return bool(A) and equivalent_sets(A, [BOTTOM])


def _universe_atoms(*bases: Iterable[Formula] | None) -> list[str]:
    atoms = set()
    for base in bases:
        for f in base or ():
            atoms |= f.atoms()
    return sorted(atoms) or ["p"]


def default_pool(inst: Instance) -> list[Formula]:
    """Literals over the instance's atoms, used for redundancy candidates."""
    atoms = [Atom(a) for a in _universe_atoms(inst.K, inst.A, inst.B)]
    return atoms + [Not(a) for a in atoms]


def redundancy_candidates(A: BeliefBase, mode: FamilyKind | str, pool: Iterable[Formula],
                          limit: int = 8) -> list[BeliefBase]:
    """Small ``Z`` sets satisfying a redundancy side condition.

    ``mode`` is ``package`` (each member implies some member of ``A``),
    ``choice`` (each member implies all of ``A``) or ``internal`` (each
    member implies the negation of every member of ``A``).  Pool formulas
    that pass are kept and conjunctions with pool literals are synthesized,
    every candidate being verified by entailment.
    """
    mode = mode.value if isinstance(mode, FamilyKind) else str(mode).lower()
    pool = list(dict.fromkeys(pool))
    literals = [f for f in pool if isinstance(f, Atom) or (isinstance(f, Not) and isinstance(f.child, Atom))]
    if mode == "package":
        if not A:
            return []
        seeds = list(A)
        test = lambda z: implies_some([z], A)
    elif mode == "choice":
        if not A:
            return []
        seeds = [conjunction_of(A)]
        test = lambda z: implies_all([z], A)
    elif mode == "internal":
        if not A:
            return []
        seeds = [conjunction_of(negate(a) for a in A)]
        test = lambda z: implies_all([z], [negate(a) for a in A])
    else:
        raise ValueError(f"unknown redundancy mode {mode!r}")
    found = [f for f in pool if test(f)]
    for s in seeds:
        found.append(s)
        found.extend(s & x for x in literals)
    ordered = sorted({f for f in found if test(f)}, key=lambda f: (len(str(f)), str(f)))
    singles = [BeliefBase([f]) for f in ordered[:limit - 1]]
    pair = [BeliefBase(ordered[:2])] if len(ordered) >= 2 else []
    return singles + pair


# ---------------------------------------------------------------------------
# shared checks

def _inclusion_in(op, inst, upper_of) -> Outcome:
    result = op(inst.K, inst.A)
    upper = upper_of(inst)
    if result <= upper:
        return HOLDS
    return _violated("result leaves the allowed bound", inputs=_inputs(inst),
                     result=result, outside=result - upper)


def _set_success(op, inst) -> Outcome:
    if not inst.A:
        return _skip("A is empty")
    result = op(inst.K, inst.A)
    if result & inst.A:
        return HOLDS
    return _violated("no input sentence accepted", inputs=_inputs(inst), result=result)


def _coincidence_candidates(inst: Instance) -> list[BeliefBase]:
    """Explicit ``B`` plus the superset ``K | A`` and an overlap variant."""
    out = [inst.B] if inst.B is not None else []
    out.append(inst.K | inst.A)
    shared = inst.K & inst.A
    if shared:
        out.append((inst.A - inst.K) | BeliefBase(shared.formulas[:1]))
    if inst.K:
        out.append((inst.A - inst.K) | BeliefBase(inst.K.formulas[-1:]))
    return list(dict.fromkeys(out))


def _coincidence(op, inst, antecedent) -> Outcome:
    applicable = 0
    for B in _coincidence_candidates(inst):
        if not antecedent(inst.K, inst.A, B):
            continue
        applicable += 1
        left, right = op(inst.K, inst.A), op(inst.K, B)
        if left != right:
            return _violated("equal-coincidence inputs gave different results",
                             inputs=_inputs(inst, B=B), result_A=left, result_B=right)
    if not applicable:
        return _skip("no input satisfies the antecedent")
    return Outcome(Verdict.HOLDS, None, f"{applicable} candidates")


def _narrow_coincidence(K, A, B) -> bool:
    return bool(K & A) and A <= B <= (K | A)


def _wide_coincidence(K, A, B) -> bool:
    return bool(K & A) and bool(K & B) and (K | A) == (K | B)


def _second_inputs(inst: Instance) -> list[BeliefBase]:
    """Second inputs for single-base uniformity checks."""
    out = [inst.B] if inst.B is not None else []
    out.append(BeliefBase(_double_negate(f) for f in inst.A))
    out.append(inst.A | BeliefBase([TOP]))
    out.append(inst.A | BeliefBase([BOTTOM]))
    return list(dict.fromkeys(out))


def _double_negate(f: Formula) -> Formula:
    return Not(Not(f))


def _single_uniformity(op, inst, signature, compare) -> Outcome:
    """``op(K, A)`` vs ``op(K, B)`` whenever every subset of ``K`` agrees on
    ``signature``."""
    subsets = list(_subsets(inst.K))
    sig_a = [signature(X, inst.A) for X in subsets]
    applicable = 0
    for B in _second_inputs(inst):
        if B == inst.A or [signature(X, B) for X in subsets] != sig_a:
            continue
        applicable += 1
        left, right = compare(op(inst.K, inst.A)), compare(op(inst.K, B))
        if left != right:
            return _violated("uniform inputs gave different results",
                             inputs=_inputs(inst, B=B), result_A=left, result_B=right)
    if not applicable:
        return _skip("no second input agrees on every subset")
    return Outcome(Verdict.HOLDS, None, f"{applicable} candidates")


def _redundancy(op, inst, mode, antecedent) -> Outcome:
    candidates = [inst.Z] if inst.Z is not None else []
    candidates += redundancy_candidates(inst.A, mode, default_pool(inst))
    applicable = 0
    for Z in dict.fromkeys(candidates):
        if not antecedent(inst, Z):
            continue
        applicable += 1
        left, right = op(inst.K, inst.A), op(inst.K | Z, inst.A)
        if left != right:
            return _violated("redundant additions changed the result",
                             inputs=_inputs(inst, Z=Z), result=left, result_with_Z=right)
    if not applicable:
        return _skip("no redundancy candidate applies")
    return Outcome(Verdict.HOLDS, None, f"{applicable} candidates")


# ---------------------------------------------------------------------------
# package and choice contraction

def _p_success(op, inst):
    if implies_some([], inst.A):
        return _skip("the empty set implies A")
    result = op(inst.K, inst.A)
    if not implies_some(result, inst.A):
        return HOLDS
    return _violated("result still implies a member of A", inputs=_inputs(inst), result=result)


def _c_success(op, inst):
    if implies_all([], inst.A):
        return _skip("the empty set implies all of A")
    result = op(inst.K, inst.A)
    if not implies_all(result, inst.A):
        return HOLDS
    return _violated("result still implies all of A", inputs=_inputs(inst), result=result)


def _contraction_relevance(implies):
    def check(op, inst):
        result = op(inst.K, inst.A)
        removed = inst.K - result
        if not removed:
            return _skip("nothing removed")
        for phi in removed:
            if not any(not implies(X, inst.A) and implies(X | BeliefBase([phi]), inst.A)
                       for X in _between(result, inst.K)):
                return _violated("removed sentence has no relevance witness",
                                 inputs=_inputs(inst), result=result, phi=phi)
        return HOLDS
    return check


def _p_redundancy_ok(inst, Z):
    return not implies_some([], inst.A) and all(implies_some([z], inst.A) for z in Z)


def _c_redundancy_ok(inst, Z):
    return not implies_all([], inst.A) and all(implies_all([z], inst.A) for z in Z)


# ---------------------------------------------------------------------------
# partial expansion

def _preservation(op, inst):
    result = op(inst.K, inst.A)
    if inst.K <= result:
        return HOLDS
    return _violated("lost a sentence of K", inputs=_inputs(inst), result=result)


def _expansion_consistency(repaired: bool):
    """``repaired`` requires the consistent superset to share a member with A."""
    def check(op, inst):
        K, A = inst.K, inst.A
        candidates = [X for X in _between(K, K | A) if not repaired or X & A]
        if not any(is_consistent(X) for X in candidates):
            return _skip("no consistent set between the bounds")
        result = op(K, A)
        if is_consistent(result):
            return HOLDS
        return _violated("inconsistent result despite a consistent option",
                         inputs=_inputs(inst), result=result)
    return check


# ---------------------------------------------------------------------------
# internal choice revision (consistent K)

def _consistent_scope(check):
    @functools.wraps(check)
    def scoped(op, inst):
        if not is_consistent(inst.K):
            return _skip("K is inconsistent (outside theorem scope)")
        return check(op, inst)
    return scoped


def _i_iteration(op, inst):
    result = op(inst.K, inst.A)
    again = op(inst.K & result, inst.A)
    if result == again:
        return HOLDS
    return _violated("revising the kept part gives a different result",
                     inputs=_inputs(inst), result=result, result_again=again)


def _i_consistency(op, inst):
    if _equiv_bottom(inst.A):
        return _skip("A is equivalent to {false}")
    result = op(inst.K, inst.A)
    if is_consistent(result):
        return HOLDS
    return _violated("inconsistent result", inputs=_inputs(inst), result=result)


def _some_consistent_with(X, A) -> bool:
    return any(_consistent(X, [a]) for a in A)


def _i_relevance(op, inst):
    result = op(inst.K, inst.A)
    removed = inst.K - result
    if not removed:
        return _skip("nothing removed")
    for phi in removed:
        if not any(_some_consistent_with(X, inst.A)
                   and all(not _consistent(X, [phi, lam]) for lam in inst.A)
                   for X in _between(inst.K & result, inst.K)):
            return _violated("removed sentence has no relevance witness",
                             inputs=_inputs(inst), result=result, phi=phi)
    return HOLDS


def _i_redundancy_ok(inst, Z):
    return (_consistent(inst.K, Z) and bool(inst.A) and not _equiv_bottom(inst.A)
            and all(implies_all([z], [negate(a) for a in inst.A]) for z in Z))


# ---------------------------------------------------------------------------
# external choice revision

def _confirmation(op, inst):
    result = op(inst.K, inst.A)
    if not (inst.A & result) <= inst.K:
        return _skip("accepted a new input sentence")
    if result == inst.K:
        return HOLDS
    return _violated("nothing new accepted yet K changed", inputs=_inputs(inst), result=result)


def _added_consistency(op, inst):
    result = op(inst.K, inst.A)
    added = result - inst.K
    if not added or not is_consistent(added):
        return _skip("added part is empty or inconsistent")
    if is_consistent(result):
        return HOLDS
    return _violated("consistent additions yet inconsistent result",
                     inputs=_inputs(inst), result=result)


def _external_relevance(op, inst, phi_of=None, polarity_as_printed=False):
    result = op(inst.K, inst.A) if phi_of is None else op(inst.K, phi_of(inst))
    removed = inst.K - result
    if not removed:
        return _skip("nothing removed")
    for phi in removed:
        if polarity_as_printed:
            found = any(not is_consistent(X) and _consistent(X, [phi])
                        for X in _between(result, inst.K | result))
        else:
            found = any(is_consistent(X) and not _consistent(X, [phi])
                        for X in _between(result, inst.K | result))
        if not found:
            return _violated("removed sentence has no relevance witness",
                             inputs=_inputs(inst), result=result, phi=phi)
    return HOLDS


def _pair_candidates(inst: Instance, S: BeliefBase, mum: bool) -> list[tuple[BeliefBase, BeliefBase]]:
    """Second instances ``(K2, B)`` whose revision may rebuild ``S``.

    For set inputs ``K2`` drops one or two sentences of ``S`` that are
    then offered as input.  For making up one's mind the dropped part is
    ``{psi, ~psi}`` restricted to ``S``.
    """
    out = []
    if inst.K2 is not None and inst.B is not None:
        out.append((inst.K2, inst.B))
    if mum:
        for t in S:
            for psi in dict.fromkeys([t, t.child] if isinstance(t, Not) else [t]):
                pair = mum_input(psi) & S
                for dropped in dict.fromkeys([BeliefBase([t]), pair]):
                    out.append((S - dropped, BeliefBase([psi])))
        for psi in (inst.psi, Not(inst.phi)):
            if psi is not None:
                out.append((inst.K, BeliefBase([psi])))
    else:
        for r in (1, 2):
            for dropped in itertools.combinations(S.formulas, r):
                T = BeliefBase(dropped)
                out.append((S - T, T))
                extra = inst.A - S
                if extra:
                    out.append((S - T, T | extra))
        if inst.B is not None:
            out.append((inst.K, inst.B))
    return list(dict.fromkeys(out))


def _mum_arg(B: BeliefBase):
    return B.formulas[0] if B else TOP


def _uniformity_pairs(op, inst, mum: bool):
    """Yield ``(K2, B, R1, R2, aux1, aux2, S1, S2)`` for candidate pairs."""
    arg1 = inst.phi if mum else inst.A
    R1 = op(inst.K, arg1)
    S1 = inst.K | R1
    for K2, B in _pair_candidates(inst, S1, mum):
        R2 = op(K2, _mum_arg(B) if mum else B)
        yield K2, B, R1, R2, R1 - inst.K, R2 - K2, S1, K2 | R2


def _ext_uniformity(mum: bool):
    def check(op, inst):
        K1 = inst.K
        arg1 = inst.phi if mum else inst.A
        R1 = op(K1, arg1)
        S = K1 | R1
        if S == K1:
            return _skip("revision added nothing")
        applicable = 0
        for K2, B, _, R2, aux1, aux2, _, S2 in _uniformity_pairs(op, inst, mum):
            if S2 != S or K2 == S:
                continue
            if _consistent_subsets(S, aux1) != _consistent_subsets(S, aux2):
                continue
            applicable += 1
            if R1 != R2:
                return _violated("uniform pair gave different results",
                                 inputs=_inputs(inst, K2=K2, B=B), result_1=R1, result_2=R2)
        if not applicable:
            return _skip("no second instance satisfies the antecedent")
        return Outcome(Verdict.HOLDS, None, f"{applicable} pairs")
    return check


def _strong_uniformity(mum: bool, as_printed: bool, inconsistent_polarity: bool):
    """Strong uniformity over every ``X``.

    Outside ``S1 | S2`` both sides fail the subset conjunct, so the
    universal condition reduces to comparing, per side, the subsets of
    ``S_i`` satisfying the consistency conjunct.  With the inconsistency
    polarity the sides compare the complementary subsets instead.
    """
    def side(S, aux):
        good = _consistent_subsets(S, aux)
        if not inconsistent_polarity:
            return good
        return frozenset(frozenset(X) for X in _subsets(S)) - good

    def check(op, inst):
        applicable = 0
        for K2, B, R1, R2, aux1, aux2, S1, S2 in _uniformity_pairs(op, inst, mum):
            if not as_printed and not (aux1 and aux2 and is_consistent(aux1) and is_consistent(aux2)):
                continue
            if side(S1, aux1) != side(S2, aux2):
                continue
            applicable += 1
            if R1 != R2:
                return _violated("strongly uniform pair gave different results",
                                 inputs=_inputs(inst, K2=K2, B=B), result_1=R1, result_2=R2)
        if not applicable:
            return _skip("no second instance satisfies the antecedent")
        return Outcome(Verdict.HOLDS, None, f"{applicable} pairs")
    return check


# ---------------------------------------------------------------------------
# making up one's mind

def _mum_inclusion(op, inst):
    phi = inst.phi
    result = op(inst.K, phi)
    upper = inst.K | mum_input(phi)
    if result <= upper:
        return HOLDS
    return _violated("result leaves K plus the stance pair", inputs=_inputs(inst),
                     result=result, outside=result - upper)


def _mum_success(op, inst):
    result = op(inst.K, inst.phi)
    if result & mum_input(inst.phi):
        return HOLDS
    return _violated("no stance taken", inputs=_inputs(inst), result=result)


def _mum_consistency(op, inst):
    result = op(inst.K, inst.phi)
    if is_consistent(result):
        return HOLDS
    return _violated("inconsistent result", inputs=_inputs(inst), result=result)


def _psi_candidates(inst: Instance) -> list[Formula]:
    out = [inst.psi] if inst.psi is not None else []
    out.append(Not(inst.phi))
    if isinstance(inst.phi, Not):
        out.append(inst.phi.child)
    for f in inst.K:
        out.append(f)
        if isinstance(f, Not):
            out.append(f.child)
    return [f for f in dict.fromkeys(out) if f != inst.phi]


def _mum_coincidence(require_consistent: bool):
    def check(op, inst):
        K, phi = inst.K, inst.phi
        if require_consistent and not is_consistent(K):
            return _skip("K is inconsistent")
        if not mum_input(phi) & K:
            return _skip("K holds no stance on phi")
        applicable = 0
        for psi in _psi_candidates(inst):
            if not mum_input(psi) & K or K | mum_input(phi) != K | mum_input(psi):
                continue
            applicable += 1
            left, right = op(K, phi), op(K, psi)
            if left != right:
                return _violated("coinciding stances gave different results",
                                 inputs=_inputs(inst, B=BeliefBase([psi])),
                                 result_phi=left, result_psi=right)
        if not applicable:
            return _skip("no second sentence satisfies the antecedent")
        return Outcome(Verdict.HOLDS, None, f"{applicable} candidates")
    return check


def _mum_iteration(op, inst):
    result = op(inst.K, inst.phi)
    kept = op(inst.K, TOP) & inst.K
    again = op(kept, inst.phi)
    if result == again:
        return HOLDS
    return _violated("revising the kept part gives a different result",
                     inputs=_inputs(inst), result=result, result_again=again)


def _mum_relevance(op, inst):
    result = op(inst.K, inst.phi)
    removed = inst.K - result
    if not removed:
        return _skip("nothing removed")
    lower = op(inst.K, TOP) & inst.K
    for psi in removed:
        if not any(is_consistent(X) and not _consistent(X, [psi])
                   for X in _between(lower, inst.K)):
            return _violated("removed sentence has no relevance witness",
                             inputs=_inputs(inst), result=result, phi=psi)
    return HOLDS


def _mum_redundancy(op, inst):
    candidates = [inst.Z] if inst.Z is not None else []
    for a in _universe_atoms(inst.K, inst.A)[:2]:
        candidates.append(BeliefBase([Atom(a) & Not(Atom(a))]))
    candidates.append(BeliefBase([BOTTOM]))
    applicable = 0
    for Z in dict.fromkeys(candidates):
        if not _equiv_bottom(Z):
            continue
        applicable += 1
        left, right = op(inst.K, inst.phi), op(inst.K | Z, inst.phi)
        if left != right:
            return _violated("adding contradictions changed the result",
                             inputs=_inputs(inst, Z=Z), result=left, result_with_Z=right)
    return Outcome(Verdict.HOLDS, None, f"{applicable} candidates")


def _mum_confirmation(op, inst):
    result = op(inst.K, inst.phi)
    if not (mum_input(inst.phi) & result) <= inst.K:
        return _skip("took a new stance")
    if result == inst.K:
        return HOLDS
    return _violated("no new stance yet K changed", inputs=_inputs(inst), result=result)


def _mum_added_consistency(op, inst):
    return _added_consistency(lambda K, A: op(K, inst.phi), inst)


# ---------------------------------------------------------------------------
# derived postulates

def _vacuity(op, inst):
    result = op(inst.K, BeliefBase())
    if result == inst.K:
        return HOLDS
    return _violated("empty input changed K", inputs=_inputs(inst, A=BeliefBase()), result=result)


def _result_preservation(op, inst):
    result = op(inst.K, inst.A)
    if is_consistent(result):
        return _skip("result is consistent")
    if inst.K <= result:
        return HOLDS
    return _violated("inconsistent result that dropped part of K",
                     inputs=_inputs(inst), result=result)


# ---------------------------------------------------------------------------
# observation identities (closure is the strategy)

def _upper_bound(kind: FamilyKind):
    implies = implies_some if kind is FamilyKind.PACKAGE else implies_all
    family_of = package_remainders if kind is FamilyKind.PACKAGE else choice_remainders

    def check(strategy, inst):
        family = family_of(inst.K, inst.A)
        applicable = 0
        for X in _subsets(inst.K):
            if implies(X, inst.A):
                continue
            applicable += 1
            bound = upper_bound_witness(inst.K, X, inst.A, kind)
            if bound not in family or not X <= bound:
                return _violated("no remainder above a non-implying subset",
                                 inputs=_inputs(inst), subset=X, bound=bound)
        if not applicable:
            return _skip("every subset implies the input")
        return HOLDS
    return check


def _cross_pairs(inst: Instance, core: BeliefBase, union: BeliefBase):
    """Anchors ``K2`` inside ``core`` with inputs covering ``union - K2``."""
    for K2 in _subsets(core):
        rest = union - K2
        for T in _subsets(K2):
            yield K2, rest | T


def _partial_sum_count(K2: BeliefBase, B: BeliefBase) -> int:
    d = len(B - K2)
    return (1 << d) if K2 & B else (1 << d) - 1


def _partial_sums_unified(strategy, inst):
    family = partial_sums(inst.K, inst.A)
    if not family:
        return _skip("empty partial-sum family")
    union = inst.K | inst.A
    size = len(family)
    for K2, B in _cross_pairs(inst, family.core(), union):
        if K2 == inst.K or _partial_sum_count(K2, B) != size:
            continue
        other = partial_sums(K2, B)
        if other.same_members(family) and size != 1:
            return _violated("distinct anchors share a non-singleton family",
                             inputs=_inputs(inst, K2=K2, B=B), family=family.as_lists())
    return HOLDS


def _partial_sums_not_remainders(strategy, inst):
    family = partial_sums(inst.K, inst.A)
    if len(family) < 2:
        return _skip("family has fewer than two members")
    carrier = inst.K | inst.A
    inputs = [inst.A, carrier, negation_set(inst.A).clauses]
    if inst.B is not None:
        inputs.append(inst.B)
    for B in inputs:
        for build in (package_remainders, choice_remainders):
            if build(carrier, B).same_members(family):
                return _violated("partial sums coincide with a remainder family",
                                 inputs=_inputs(inst, B=B), family=family.as_lists())
    return HOLDS


def _overlap_kept(strategy, inst):
    if not is_consistent(inst.K):
        return _skip("K is inconsistent")
    trace = internal_choice_revise(inst.K, inst.A, strategy)
    if (inst.K & inst.A) <= trace.stage1:
        return HOLDS
    return _violated("overlap with the input lost", inputs=_inputs(inst), stage1=trace.stage1)


def _internal_trace(strategy, inst):
    if not is_consistent(inst.K):
        return _skip("K is inconsistent")
    trace = internal_choice_revise(inst.K, inst.A, strategy)
    if inst.K & trace.result == trace.stage1:
        return HOLDS
    return _violated("kept part differs from the contraction stage",
                     inputs=_inputs(inst), stage1=trace.stage1, result=trace.result)


def _external_trace(strategy, inst):
    trace = external_choice_revise(inst.K, inst.A, strategy)
    if trace.result - inst.K == trace.stage1 - inst.K and trace.result | inst.K == trace.stage1:
        return HOLDS
    return _violated("result disagrees with the expansion stage",
                     inputs=_inputs(inst), stage1=trace.stage1, result=trace.result)


def _oracle(shortcut, explicit):
    def check(strategy, inst):
        if len(inst.A) > 3:
            return _skip("input larger than three sentences")
        fast = shortcut(inst.K, inst.A)
        slow = explicit(inst.K, negation_set(inst.A).clauses)
        if fast.same_members(slow):
            return HOLDS
        return _violated("shortcut and explicit negation-set families differ",
                         inputs=_inputs(inst), shortcut=fast.as_lists(), explicit=slow.as_lists())
    return check


# ---------------------------------------------------------------------------
# registry

def _k_bound(inst):
    return inst.K


def _ka_bound(inst):
    return inst.K | inst.A


def _a_bound(inst):
    return inst.A


def _registry() -> dict[str, Postulate]:
    inclusion_k = lambda op, inst: _inclusion_in(op, inst, _k_bound)
    inclusion_ka = lambda op, inst: _inclusion_in(op, inst, _ka_bound)
    scoped = _consistent_scope
    entries = [
        # package contraction
        Postulate("T1.inclusion", "package", inclusion_k),
        Postulate("T1.success", "package", _p_success),
        Postulate("T1.uniformity", "package",
                  lambda op, inst: _single_uniformity(op, inst, implies_some, lambda r: r)),
        Postulate("T1.relevance", "package", _contraction_relevance(implies_some)),
        Postulate("T1.redundancy", "package",
                  lambda op, inst: _redundancy(op, inst, "package", _p_redundancy_ok)),
        # choice contraction
        Postulate("T2.inclusion", "choice", inclusion_k),
        Postulate("T2.inclusion-as-printed", "choice",
                  lambda op, inst: _inclusion_in(op, inst, _a_bound), True,
                  "bound printed as the input instead of K"),
        Postulate("T2.success", "choice", _c_success),
        Postulate("T2.uniformity", "choice",
                  lambda op, inst: _single_uniformity(op, inst, implies_all, lambda r: r)),
        Postulate("T2.relevance", "choice", _contraction_relevance(implies_all)),
        Postulate("T2.redundancy", "choice",
                  lambda op, inst: _redundancy(op, inst, "choice", _c_redundancy_ok)),
        # partial expansion, plain and consistency preserving
        Postulate("T3.inclusion", "expand", inclusion_ka),
        Postulate("T3.preservation", "expand", _preservation),
        Postulate("T3.success", "expand", _set_success),
        Postulate("T3.coincidence", "expand",
                  lambda op, inst: _coincidence(op, inst, _narrow_coincidence)),
        Postulate("T3.cp-inclusion", "expand-consistent", inclusion_ka),
        Postulate("T3.cp-preservation", "expand-consistent", _preservation),
        Postulate("T3.cp-success", "expand-consistent", _set_success),
        Postulate("T3.cp-coincidence", "expand-consistent",
                  lambda op, inst: _coincidence(op, inst, _narrow_coincidence)),
        Postulate("T3.consistency", "expand-consistent", _expansion_consistency(True)),
        Postulate("T3.consistency-as-printed", "expand-consistent", _expansion_consistency(False),
                  True, "admits X = K, which is not a partial sum"),
        # internal choice revision
        Postulate("T4.inclusion", "internal", scoped(inclusion_ka)),
        Postulate("T4.success", "internal", scoped(_set_success)),
        Postulate("T4.iteration", "internal", scoped(_i_iteration)),
        Postulate("T4.consistency", "internal", scoped(_i_consistency)),
        Postulate("T4.coincidence", "internal",
                  scoped(lambda op, inst: _coincidence(op, inst, _narrow_coincidence))),
        Postulate("T4.uniformity", "internal", scoped(
            lambda op, inst: _single_uniformity(
                op, inst, _some_consistent_with, lambda r: inst.K & r))),
        Postulate("T4.relevance", "internal", scoped(_i_relevance)),
        Postulate("T4.redundancy", "internal",
                  scoped(lambda op, inst: _redundancy(op, inst, "internal", _i_redundancy_ok))),
        # external choice revision
        Postulate("T5.inclusion", "external", inclusion_ka),
        Postulate("T5.success", "external", _set_success),
        Postulate("T5.confirmation", "external", _confirmation),
        Postulate("T5.Consistency", "external", _added_consistency),
        Postulate("T5.coincidence", "external",
                  lambda op, inst: _coincidence(op, inst, _narrow_coincidence)),
        Postulate("T5.Uniformity", "external", _ext_uniformity(False)),
        Postulate("T5.Relevance", "external", lambda op, inst: _external_relevance(op, inst)),
        Postulate("T5.strong-Uniformity", "external", _strong_uniformity(False, False, False)),
        Postulate("T5.strong-Uniformity-as-printed", "external",
                  _strong_uniformity(False, True, False), True,
                  "fails when a side adds nothing or adds an inconsistent set"),
        # internal making up one's mind
        Postulate("T6.inclusion", "mum-internal", _mum_inclusion),
        Postulate("T6.success", "mum-internal", _mum_success),
        Postulate("T6.consistency", "mum-internal", _mum_consistency),
        Postulate("T6.coincidence", "mum-internal", _mum_coincidence(True)),
        Postulate("T6.iteration", "mum-internal", _mum_iteration),
        Postulate("T6.relevance", "mum-internal", _mum_relevance),
        Postulate("T6.redundancy", "mum-internal", _mum_redundancy),
        # external making up one's mind
        Postulate("T7.inclusion", "mum-external", _mum_inclusion),
        Postulate("T7.success", "mum-external", _mum_success),
        Postulate("T7.confirmation", "mum-external", _mum_confirmation),
        Postulate("T7.Consistency", "mum-external", _mum_added_consistency),
        Postulate("T7.Coincidence", "mum-external", _mum_coincidence(False)),
        Postulate("T7.Uniformity", "mum-external", _ext_uniformity(True)),
        Postulate("T7.Relevance", "mum-external",
                  lambda op, inst: _external_relevance(op, inst, lambda i: i.phi)),
        Postulate("T7.Relevance-as-printed", "mum-external",
                  lambda op, inst: _external_relevance(op, inst, lambda i: i.phi, True), True,
                  "swapped polarity; unsatisfiable whenever something is removed"),
        Postulate("T7.strong-Uniformity", "mum-external", _strong_uniformity(True, False, False)),
        Postulate("T7.strong-Uniformity-as-printed", "mum-external",
                  _strong_uniformity(True, True, True), True,
                  "inconsistency polarity; holds vacuously for degenerate pairs"),
        # derived postulates
        Postulate("L1.expand-Coincidence", "expand",
                  lambda op, inst: _coincidence(op, inst, _wide_coincidence)),
        Postulate("L1.internal-Coincidence", "internal",
                  scoped(lambda op, inst: _coincidence(op, inst, _wide_coincidence))),
        Postulate("L1.external-Coincidence", "external",
                  lambda op, inst: _coincidence(op, inst, _wide_coincidence)),
        Postulate("L1.internal-vacuity", "internal", _vacuity),
        Postulate("L1.external-vacuity", "external", _vacuity),
        Postulate("L1.internal-preservation", "internal", scoped(_result_preservation)),
        Postulate("L1.external-preservation", "external", _result_preservation),
        Postulate("L1.internal-confirmation", "internal", scoped(_confirmation)),
        # observation identities
        Postulate("OBS.upper-bound-package", "strategy", _upper_bound(FamilyKind.PACKAGE)),
        Postulate("OBS.upper-bound-choice", "strategy", _upper_bound(FamilyKind.CHOICE)),
        Postulate("OBS.partial-sums-not-remainders", "strategy", _partial_sums_not_remainders),
        Postulate("OBS.partial-sums-unified", "strategy", _partial_sums_unified),
        Postulate("OBS.overlap-kept", "strategy", _overlap_kept),
        Postulate("OBS.internal-trace", "strategy", _internal_trace),
        Postulate("OBS.external-trace", "strategy", _external_trace),
        Postulate("OBS.oracle-choice-negation", "strategy",
                  _oracle(choice_remainders_vs_negation, choice_remainders)),
        Postulate("OBS.oracle-package-negation", "strategy",
                  _oracle(package_remainders_vs_negation, package_remainders)),
    ]
    for p in entries:
        if p.discrepancy and not p.note:
            raise AssertionError(p.name)
    return {p.name: p for p in entries}


POSTULATES: dict[str, Postulate] = _registry()


def make_operator(target: str, strategy: SelectionStrategy) -> Callable:
    """The shipped operator for a postulate target, bound to ``strategy``."""
    builders = {
        "package": lambda K, A: package_contract(K, A, strategy),
        "choice": lambda K, A: choice_contract(K, A, strategy),
        "expand": lambda K, A: partial_expand(K, A, strategy),
        "expand-consistent": lambda K, A: consistent_expand(K, A, strategy),
        "internal": lambda K, A: internal_choice_revise(K, A, strategy).result,
        "external": lambda K, A: external_choice_revise(K, A, strategy).result,
        "mum-internal": lambda K, phi: mum_internal(K, phi, strategy),
        "mum-external": lambda K, phi: mum_external(K, phi, strategy),
    }
    if target == "strategy":
        return strategy
    if target not in builders:
        raise ValueError(f"unknown operator target {target!r}")
    return functools.lru_cache(maxsize=None)(builders[target])


def resolve_name(name: str, theorem: str | None = None) -> str:
    """Full postulate name from a possibly unqualified or case-folded one."""
    if name in POSTULATES:
        return name
    if theorem and f"{theorem}.{name}" in POSTULATES:
        return f"{theorem}.{name}"
    wanted = name.lower()
    matches = [n for n in POSTULATES
               if n.lower() == wanted
               or ((theorem is None or n.startswith(theorem + ".")) and n.split(".", 1)[1].lower() == wanted)]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise KeyError(f"unknown postulate {name!r}")
    raise KeyError(f"ambiguous postulate {name!r}: {', '.join(sorted(matches))}")


def check_postulate(name: str, operator: Callable | None, instance: Instance) -> PostulateReport:
    """Evaluate one postulate on one instance.

    ``operator`` defaults to the shipped operator for the postulate's
    target under ``instance.strategy``.
    """
    postulate = POSTULATES[resolve_name(name)]
    if operator is None:
        operator = make_operator(postulate.target, instance.strategy)
    outcome = postulate.check(operator, instance)
    return PostulateReport(postulate.name, instance, outcome.verdict, outcome.witness, outcome.detail)


def recheck(report: PostulateReport, operator: Callable | None = None) -> bool:
    """Rebuild an instance from a violation witness and confirm it still fails."""
    if report.verdict is not Verdict.VIOLATED or report.witness is None:
        return False
    given = report.witness["inputs"]
    fields = {k: BeliefBase(v) for k, v in given.items()}
    inst = replace(report.instance, B=fields.get("B"), Z=fields.get("Z"),
                   K2=fields.get("K2"), K=fields["K"], A=fields["A"])
    return check_postulate(report.postulate, operator, inst).verdict is Verdict.VIOLATED
