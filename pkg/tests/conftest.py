import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from choicerev.logic import BOTTOM, TOP, And, Atom, BeliefBase, Iff, Implies, Not, Or

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ATOMS = [Atom(n) for n in "pqr"]


def formulas(max_leaves: int = 6):
    leaves = st.sampled_from(ATOMS + [TOP, BOTTOM])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Implies, children, children),
            st.builds(Iff, children, children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def bases(max_size: int = 4, min_size: int = 0):
    return st.lists(formulas(4), min_size=min_size, max_size=max_size).map(BeliefBase)


# One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
