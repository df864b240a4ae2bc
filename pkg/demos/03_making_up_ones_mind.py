"""Revising by {phi, ~phi}: taking a stance on phi."""

# %%
from choicerev import BeliefBase, PriorityOrder, SelectionStrategy, is_consistent, parse_formula
from choicerev.operators import mum_external, mum_internal

p1 = parse_formula("p1")
torn = BeliefBase(["p1", "~p1"])

# %% The internal operator picks a side according to priority.
for first in ("p1", "~p1"):
    strategy = SelectionStrategy.full(PriorityOrder.from_sequence([first]))
    print(f"prefer {first:>3}:", mum_internal(torn, p1, strategy))

# %% The external operator with full meet can keep both sides.
result = mum_external(BeliefBase(["p1", "p2"]), parse_formula("p3"))
print("external:", result, "consistent:", is_consistent(result))
