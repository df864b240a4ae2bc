"""Run postulate suites over a generated corpus and read the summaries."""

# %%
from choicerev import BeliefBase, SelectionStrategy
from choicerev.postulates import GeneratorConfig, Instance, check_postulate, make_operator, run_suite

config = GeneratorConfig(num=100, seed=3)

# %% Every counted postulate should report zero violations.
for theorem in ("T1", "T4", "T5", "T7"):
    summary = run_suite(theorem, config, SelectionStrategy.top_k(2))
    print(f"{theorem}: holds={summary.holds} violated={summary.violated} "
          f"inapplicable={summary.inapplicable}")

# %% Known discrepancies are tallied apart from the counts.
summary = run_suite("T7", config, SelectionStrategy.full())
for name, tally in summary.known_discrepancies.items():
    print(name, tally["violated"], "-", tally["note"])

# %% Single checks return a witness that can be replayed.
inst = Instance(BeliefBase(["q"]), BeliefBase(["p", "p -> ~q"]))
report = check_postulate("T4.relevance", make_operator("external", SelectionStrategy.full()), inst)
print(report.verdict.value, report.witness)
