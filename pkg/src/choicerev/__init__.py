"""Choice revision on finite propositional belief bases.

Remainder families, partial sums, selection strategies, the internal and
external choice-revision operators, making up one's mind, and executable
postulate suites.
"""

from .logic import (
    BOTTOM, TOP, And, Atom, BeliefBase, Bottom, CapacityError, Caps, Formula, Iff,
    Implies, Not, Or, ParseError, Top, entails, equivalent, equivalent_sets,
    implies_all, implies_some, is_consistent, parse_formula, use_caps,
)
from .operators import (
    RevisionMode, RevisionTrace, choice_contract, consistent_expand,
    external_choice_revise, internal_choice_revise, mum_external, mum_input,
    mum_internal, package_contract, partial_expand,
)
from .remainders import (
    FamilyKind, NegationSet, PreconditionError, SubsetFamily, choice_remainders,
    choice_remainders_vs_negation, negation_set, package_remainders,
    package_remainders_vs_negation, partial_sums, upper_bound_witness,
)
from .selection import (
    PriorityOrder, SelectionStrategy, StrategyKind, meet_select, select,
    select_expansion_consistent, union_select,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
