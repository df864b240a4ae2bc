"""Reproducible random instances for the postulate suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from ..logic import BOTTOM, TOP, And, Atom, BeliefBase, Formula, Iff, Implies, Not, Or
from ..selection import PriorityOrder, SelectionStrategy
from .predicates import Instance

__all__ = ["GeneratorConfig", "formula_pool", "generate_instances", "CORNER_CASES"]

ATOM_NAMES = ("p", "q", "r", "s", "t", "u")

# Every instance index cycles through these; "plain" means no forcing.
CORNER_CASES = (
    "empty-input", "bottom-input", "bottom-equivalent-input", "inconsistent-base",
    "overlap", "tautology-input", "conflicting-input", "double-negation", "plain",
)


@dataclass(frozen=True)
class GeneratorConfig:
    num: int = 500
    seed: int = 0
    max_base: int = 5
    max_input: int = 3
    atoms: int = 3
    pool_depth: int = 1

    def __post_init__(self):
        if not 1 <= self.atoms <= len(ATOM_NAMES):
            raise ValueError(f"atoms must be between 1 and {len(ATOM_NAMES)}")
        if self.num < 0 or self.max_base < 2 or self.max_input < 1 or self.pool_depth < 0:
            raise ValueError("invalid generator configuration")


_BINARY = (And, Or, Implies, Iff)


def formula_pool(atoms: int, depth: int = 1, rng: random.Random | None = None,
                 extra: int = 12) -> list[Formula]:
    """Atoms and negations, then every binary combination of distinct atoms
    at depth 1, then ``extra`` random deeper formulas per level beyond."""
    rng = rng or random.Random(0)
    base = [Atom(a) for a in ATOM_NAMES[:atoms]]
    pool = base + [Not(a) for a in base]
    if depth >= 1:
        for i, a in enumerate(base):
            for b in base[i + 1:]:
                pool += [And(a, b), Or(a, b), Implies(a, b), Implies(b, a), Iff(a, b)]
    for _ in range(2, depth + 1):
        level = list(pool)
        for _ in range(extra):
            op = rng.choice(_BINARY + (Not,))
            if op is Not:
                pool.append(Not(rng.choice(level)))
            else:
                pool.append(op(rng.choice(level), rng.choice(level)))
    return list(dict.fromkeys(pool))


def _sample(rng: random.Random, pool: list[Formula], size: int) -> list[Formula]:
    return rng.sample(pool, min(size, len(pool)))


def _second_input(rng: random.Random, K: BeliefBase, A: BeliefBase,
                  pool: list[Formula], max_input: int) -> BeliefBase | None:
    kind = rng.randrange(5)
    if kind == 0:
        return None
    if kind == 1:
        # element-wise equivalent variant
        return BeliefBase(Not(Not(f)) if rng.random() < 0.5 else f for f in A)
    if kind == 2:
        # superset inside K | A
        return A | BeliefBase(_sample(rng, list(K), rng.randint(0, len(K))))
    if kind == 3 and K:
        # same new part, different overlap with K
        return (A - K) | BeliefBase(_sample(rng, list(K), rng.randint(1, len(K))))
    return BeliefBase(_sample(rng, pool, rng.randint(0, max_input)))


def generate_instances(config: GeneratorConfig,
                       strategy: SelectionStrategy | None = None) -> Iterator[Instance]:
    """Stream ``config.num`` instances; identical configs give identical streams.

    Each instance gets ``strategy`` re-ranked by a random priority over
    ``K | A``; the random draws do not depend on the strategy, so every
    strategy sees the same bases and priorities.
    """
    strategy = strategy or SelectionStrategy.full()
    rng = random.Random(config.seed)
    pool = formula_pool(config.atoms, config.pool_depth, random.Random(config.seed))
    atoms = pool[:config.atoms]
    for index in range(config.num):
        case = CORNER_CASES[index % len(CORNER_CASES)]
        seed = rng.getrandbits(32)
        local = random.Random(seed)
        K = list(_sample(local, pool, local.randint(0, config.max_base)))
        if case == "inconsistent-base":
            f = local.choice(pool)
            K = K[:config.max_base - 2] + [f, Not(f)]
        elif case == "double-negation":
            f = local.choice(pool)
            K = K[:config.max_base - 2] + [f, Not(Not(f))]
        K = BeliefBase(K)
        size = local.randint(1, config.max_input)
        if case == "empty-input":
            A = BeliefBase()
        elif case == "bottom-input":
            A = BeliefBase([BOTTOM])
        elif case == "bottom-equivalent-input":
            a = local.choice(atoms)
            A = BeliefBase([And(a, Not(a))] + ([BOTTOM] if local.random() < 0.5 else []))
        elif case == "overlap" and K:
            shared = _sample(local, list(K), local.randint(1, min(len(K), config.max_input)))
            fresh = _sample(local, pool, config.max_input - len(shared))
            A = BeliefBase(shared + fresh[:local.randint(0, len(fresh))])
        elif case == "tautology-input":
            a = local.choice(atoms)
            taut = local.choice([TOP, Or(a, Not(a))])
            A = BeliefBase([taut] + _sample(local, pool, size - 1))
        elif case == "conflicting-input" and K:
            A = BeliefBase([Not(local.choice(list(K)))] + _sample(local, pool, size - 1))
        else:
            A = BeliefBase(_sample(local, pool, size))
        if case == "double-negation":
            A = BeliefBase([f] + _sample(local, pool, size - 1))
            B = BeliefBase([Not(f)])
        else:
            B = _second_input(local, K, A, pool, config.max_input)
        ranked = list((K | A).formulas)
        local.shuffle(ranked)
        inst_strategy = strategy.with_priority(PriorityOrder.from_sequence(ranked))
        yield Instance(K, A, B, None, inst_strategy, seed, index)
