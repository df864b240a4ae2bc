import pytest
from hypothesis import given

from choicerev.formats import (
    parse_base_text, parse_input_list, parse_priority_text, read_base, render_base,
)
from choicerev.logic import BeliefBase, ParseError, parse_formula

from conftest import bases


def test_base_text_skips_comments_and_blanks():
    text = "# beliefs\np\n\n  ~q   # trailing\n~r\n"
    assert parse_base_text(text) == BeliefBase(["p", "~q", "~r"])


def test_base_error_offset_counts_whole_file():
    with pytest.raises(ParseError) as info:
        parse_base_text("p\nq &\n")
    assert info.value.offset == len("p\nq &".encode())


def test_input_list():
    assert parse_input_list("p, p->~q") == BeliefBase(["p", "p -> ~q"])
    assert parse_input_list("") == BeliefBase()
    assert parse_input_list("  ") == BeliefBase()
    with pytest.raises(ParseError) as info:
        parse_input_list("p, q &")
    assert info.value.offset == 6


def test_priority_text():
    order = parse_priority_text("# ranks\n1 q\n2   r | s\n")
    assert order.weights == {parse_formula("q"): 1, parse_formula("r | s"): 2}
    with pytest.raises(ParseError):
        parse_priority_text("first q")
    with pytest.raises(ParseError):
        parse_priority_text("3")


@given(bases(5))
def test_render_round_trip(K):
    assert parse_base_text(render_base(K)) == K


def test_read_base(tmp_path):
    path = tmp_path / "k.txt"
    path.write_text("p\n¬q\n", encoding="utf-8")
    assert read_base(path) == BeliefBase(["p", "~q"])
