import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from choicerev.logic import TOP, BeliefBase, is_consistent, parse_formula
from choicerev.operators import (
    RevisionMode, choice_contract, consistent_expand, external_choice_revise,
    internal_choice_revise, mum_external, mum_input, mum_internal, package_contract,
    partial_expand,
)
from choicerev.selection import PriorityOrder, SelectionStrategy

from conftest import bases

STRATEGIES = [SelectionStrategy.full(), SelectionStrategy.maxichoice(), SelectionStrategy.top_k(2)]


def B(*texts):
    return BeliefBase(texts)


def prio(*texts):
    return PriorityOrder.from_sequence(texts)


class TestContraction:
    def test_full_package_meet(self):
        assert package_contract(B("p", "p -> q", "q"), B("q")) == B()

    def test_tautology_input_keeps_base(self):
        K = B("p", "q")
        assert package_contract(K, B("true")) == K

    def test_maxichoice_package(self):
        s = SelectionStrategy.maxichoice(prio("p"))
        assert package_contract(B("p", "p -> q", "q"), B("q"), s) == B("p")

    def test_choice(self):
        assert choice_contract(B("p", "q"), B("p", "q")) == B()
        assert choice_contract(B("p", "q"), B()) == B("p", "q")
        assert choice_contract(B("p", "q"), B("p", "q"), SelectionStrategy.maxichoice(prio("q"))) == B("q")


class TestExpansion:
    def test_full_is_plain_union(self):
        assert partial_expand(B("p"), B("q", "r")) == B("p", "q", "r")

    def test_empty_input(self):
        assert partial_expand(B("p"), B()) == B("p")

    def test_maxichoice(self):
        s = SelectionStrategy.maxichoice(prio("q"))
        assert partial_expand(B("p"), B("q", "r"), s) == B("p", "q")

    def test_consistent_variant(self):
        assert consistent_expand(B("p"), B("~p", "q"), SelectionStrategy.full()) == B("p", "q")


class TestInternalRevision:
    def test_example_one(self):
        start = time.perf_counter()
        trace = internal_choice_revise(B("p", "~q", "~r"), B("q", "r"),
                                       SelectionStrategy.full(prio("q")))
        assert trace.stage1 == B("p")
        assert trace.result == B("p", "q")
        assert trace.mode is RevisionMode.INTERNAL
        assert time.perf_counter() - start < 1

    def test_empty_input(self):
        K = B("p", "~q")
        assert internal_choice_revise(K, B()).result == K

    @pytest.mark.parametrize("strategy", STRATEGIES, ids=lambda s: s.label)
    def test_direct_conflict(self, strategy):
        trace = internal_choice_revise(B("q"), B("~q"), strategy)
        assert trace.stage1 == B()
        assert trace.result == B("~q")

    def test_separate_expansion_strategy(self):
        trace = internal_choice_revise(B("p", "~q", "~r"), B("q", "r"), SelectionStrategy.full(),
                                       SelectionStrategy.full(prio("r")))
        assert trace.result == B("p", "r")

    @given(bases(4), bases(3), st.sampled_from(STRATEGIES))
    def test_trace_shape(self, K, A, strategy):
        trace = internal_choice_revise(K, A, strategy)
        assert trace.stage1 <= K
        assert trace.result <= K | A
        assert trace.stage1 <= trace.result


class TestExternalRevision:
    def test_example_two(self):
        start = time.perf_counter()
        trace = external_choice_revise(B("q"), B("p", "p -> ~q"))
        assert trace.stage1 == B("q", "p", "p -> ~q")
        assert trace.aux == B("p", "p -> ~q")
        assert trace.result == B("p", "p -> ~q")
        assert time.perf_counter() - start < 1

    def test_empty_input_and_confirmation(self):
        assert external_choice_revise(B("p"), B()).result == B("p")
        trace = external_choice_revise(B("p"), B("p"))
        assert trace.aux == B() and trace.result == B("p")

    @given(bases(4), bases(3), st.sampled_from(STRATEGIES))
    def test_trace_shape(self, K, A, strategy):
        trace = external_choice_revise(K, A, strategy)
        assert K <= trace.stage1 <= K | A
        assert trace.result <= trace.stage1
        assert trace.aux == trace.stage1 - K

    def test_json(self):
        data = external_choice_revise(B("q"), B("p", "p -> ~q")).to_json()
        assert data == {"mode": "external", "stage1": ["p", "p -> ~q", "q"],
                        "aux": ["p", "p -> ~q"], "result": ["p", "p -> ~q"]}


class TestMakingUpOnesMind:
    def test_input_pair_is_syntactic(self):
        assert mum_input(parse_formula("~p")) == B("~p", "~~p")

    def test_example_three_follows_priority(self):
        K = B("p1", "~p1")
        p1 = parse_formula("p1")
        assert mum_internal(K, p1, SelectionStrategy.full(prio("p1"))) == B("p1")
        assert mum_internal(K, p1, SelectionStrategy.full(prio("~p1"))) == B("~p1")

    def test_example_four(self):
        got = mum_external(B("p1", "p2"), parse_formula("p3"), SelectionStrategy.full())
        assert got == B("p1", "p2", "p3", "~p3")
        assert not is_consistent(got)

    @pytest.mark.parametrize("strategy", STRATEGIES, ids=lambda s: s.label)
    def test_undecided_empty_base(self, strategy):
        assert mum_internal(B(), parse_formula("p"), strategy) in (B("p"), B("~p"))

    @given(bases(4), st.sampled_from(STRATEGIES))
    def test_internal_takes_one_consistent_stance(self, K, strategy):
        got = mum_internal(K, parse_formula("p"), strategy)
        assert is_consistent(got)
        assert got & B("p", "~p")

    def test_tautology_stance(self):
        assert mum_internal(B("q"), TOP) == B("q", "true")
