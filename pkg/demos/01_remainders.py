"""Remainder families, partial sums and negation sets on a small base."""

# %%
from choicerev import BeliefBase
from choicerev.remainders import (
    choice_remainders, choice_remainders_vs_negation, negation_set,
    package_remainders, partial_sums,
)

K = BeliefBase(["p", "~q", "~r"])
A = BeliefBase(["q", "r"])

# %% Negation set: disjunctions of negated inputs.
print("n(A):", negation_set(A).clauses)

# %% Package remainders drop anything implying a member of A; choice
# remainders only need to avoid implying all of A.
print("package :", package_remainders(K, BeliefBase(["p", "~q"])).as_lists())
print("choice  :", choice_remainders(K, BeliefBase(["p", "~q"])).as_lists())

# %% Choice remainders against the negation set keep room for some of A.
print("vs n(A) :", choice_remainders_vs_negation(K, A).as_lists())

# %% Partial sums: K plus at least one input.
for member in partial_sums(K, A):
    print("partial :", member)
