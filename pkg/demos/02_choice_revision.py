"""Internal and external choice revision, side by side."""

# %%
from choicerev import BeliefBase, PriorityOrder, SelectionStrategy
from choicerev.operators import external_choice_revise, internal_choice_revise

K = BeliefBase(["p", "~q", "~r"])
A = BeliefBase(["q", "r"])
prefer_q = PriorityOrder.from_sequence(["q", "r"])

# %% Internal: contract first, then add a consistent part of A.
trace = internal_choice_revise(K, A, SelectionStrategy.full(prefer_q))
print("internal stage1:", trace.stage1)
print("internal result:", trace.result)

# %% External: add first, then contract away the conflict with what was added.
trace = external_choice_revise(BeliefBase(["q"]), BeliefBase(["p", "p -> ~q"]))
print("external stage1:", trace.stage1, "added:", trace.aux)
print("external result:", trace.result)

# %% Strategies change which members survive.
for strategy in (SelectionStrategy.full(prefer_q), SelectionStrategy.maxichoice(prefer_q),
                 SelectionStrategy.top_k(2, prefer_q)):
    print(f"{strategy.label:>10}:", internal_choice_revise(K, A, strategy).result)
