"""Brute-force reference implementations used as test oracles.

Everything here works from first principles: valuations enumerated with
itertools and formulas evaluated recursively.  Nothing is shared with the
bitmask code paths under test.
"""

import itertools

from choicerev.logic import And, Atom, Bottom, Iff, Implies, Not, Or, Top


def atoms_of(*groups):
    names = set()
    for group in groups:
        for f in group:
            names |= f.atoms()
    return sorted(names)


def holds(f, v):
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not holds(f.child, v)
    left, right = holds(f.left, v), holds(f.right, v)
    if isinstance(f, And):
        return left and right
    if isinstance(f, Or):
        return left or right
    if isinstance(f, Implies):
        return (not left) or right
    if isinstance(f, Iff):
        return left == right
    raise TypeError(f)


def all_valuations(names):
    for bits in itertools.product([False, True], repeat=len(names)):
        yield dict(zip(names, bits))


def satisfiable(formulas, names=None):
    formulas = list(formulas)
    names = names if names is not None else atoms_of(formulas)
    return any(all(holds(f, v) for f in formulas) for v in all_valuations(names))


def follows(formulas, goal):
    formulas = list(formulas)
    names = atoms_of(formulas, [goal])
    return all(holds(goal, v) for v in all_valuations(names)
               if all(holds(f, v) for f in formulas))


def subsets(items):
    items = sorted(items, key=str)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def maximal(sets):
    sets = list(sets)
    return {s for s in sets if not any(s < t for t in sets)}


def package_family(K, A):
    return maximal(X for X in subsets(K) if not any(follows(X, a) for a in A))


def choice_family(K, A):
    return maximal(X for X in subsets(K) if not all(follows(X, a) for a in A))


def partial_sum_family(K, A):
    K, A = frozenset(K), frozenset(A)
    return {K | X for X in subsets(A) if (K | X) & A}


def negation_clauses(A):
    """Disjunctions of negated members, one per nonempty subset of ``A``."""
    out = []
    for S in subsets(A):
        if not S:
            continue
        members = sorted(S, key=str)
        clause = Not(members[0])
        for f in members[1:]:
            clause = Or(clause, Not(f))
        out.append(clause)
    return out or [Top()]


def members(family):
    """Family object or iterable of bases as a set of frozensets."""
    return {frozenset(m) for m in family}
