import json
import subprocess
import sys

import pytest

from choicerev.cli import main
from choicerev.formats import parse_base_text
from choicerev.logic import BeliefBase


@pytest.fixture
def files(tmp_path):
    base = tmp_path / "base.txt"
    base.write_text("p\n~q\n~r\n")
    prio = tmp_path / "prio.txt"
    prio.write_text("1 q\n2 r\n")
    single = tmp_path / "q.txt"
    single.write_text("q\n")
    return {"base": str(base), "prio": str(prio), "q": str(single), "dir": tmp_path}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestOperators:
    def test_example_one(self, capsys, files):
        code, out, _ = run(capsys, "revise-internal", "--base", files["base"],
                           "--input", "q,r", "--priority", files["prio"])
        assert code == 0
        assert parse_base_text(out) == BeliefBase(["p", "q"])
        assert "# stage1: {p}" in out

    def test_example_two_json(self, capsys, files):
        code, out, _ = run(capsys, "--mode", "revise-external", "--base", files["q"],
                           "--input", "p, p->~q", "--output", "json")
        data = json.loads(out)
        assert code == 0
        assert data["result"] == ["p", "p -> ~q"]
        assert data["aux"] == ["p", "p -> ~q"]
        assert data["mode"] == "revise-external"

    @pytest.mark.parametrize("mode", ["contract-package", "contract-choice", "expand",
                                      "revise-internal", "revise-external", "mum-internal",
                                      "mum-external"])
    def test_empty_input_echoes_base(self, capsys, files, mode):
        code, out, _ = run(capsys, mode, "--base", files["base"], "--input", "")
        assert code == 0
        assert parse_base_text(out) == BeliefBase(["p", "~q", "~r"])

    def test_mum_external(self, capsys, tmp_path):
        base = tmp_path / "b.txt"
        base.write_text("p1\np2\n")
        code, out, _ = run(capsys, "mum-external", "--base", str(base), "--input", "p3")
        assert parse_base_text(out) == BeliefBase(["p1", "p2", "p3", "~p3"])

    def test_mum_needs_one_formula(self, capsys, files):
        code, _, err = run(capsys, "mum-internal", "--base", files["base"], "--input", "p,q")
        assert code == 2 and "exactly one" in err

    def test_input_file_and_strategy(self, capsys, files):
        inp = files["dir"] / "in.txt"
        inp.write_text("q\nr\n")
        code, out, _ = run(capsys, "expand", "--base", files["base"], "--input-file", str(inp),
                           "--strategy", "maxichoice", "--priority", files["prio"])
        assert parse_base_text(out) == BeliefBase(["p", "~q", "~r", "q"])

    def test_consistent_expand(self, capsys, files):
        code, out, _ = run(capsys, "expand", "--consistent", "--base", files["base"],
                           "--input", "q, s")
        assert parse_base_text(out) == BeliefBase(["p", "~q", "~r", "s"])


class TestRemainders:
    def test_example_one_family(self, capsys, files):
        code, out, _ = run(capsys, "remainders", "--base", files["base"], "--input", "q,r",
                           "--kind", "∠n", "--output", "json")
        assert json.loads(out) == [["p", "~q"], ["p", "~r"]]

    def test_empty_partial_sums(self, capsys, files):
        _, out, _ = run(capsys, "remainders", "--base", files["base"], "--input", "",
                        "--kind", "⋈", "--output", "json")
        assert json.loads(out) == []

    def test_negation_set(self, capsys):
        _, out, _ = run(capsys, "remainders", "--input", "p", "--kind", "n", "--output", "json")
        assert json.loads(out) == ["~p"]

    def test_text_output(self, capsys, files):
        _, out, _ = run(capsys, "remainders", "--base", files["base"], "--input", "p", "--kind", "package")
        assert "{~q, ~r}" in out

    def test_unknown_kind(self, capsys, files):
        code, _, _ = run(capsys, "remainders", "--base", files["base"], "--input", "p", "--kind", "x")
        assert code == 2


class TestErrors:
    def test_parse_error(self, capsys, files):
        code, _, err = run(capsys, "expand", "--base", files["base"], "--input", "q &")
        assert code == 2 and "byte" in err

    def test_bad_base_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("p\n(q\n")
        code, _, err = run(capsys, "expand", "--base", str(bad), "--input", "q")
        assert code == 2 and "byte 4" in err

    def test_capacity_error(self, capsys, files):
        code, _, err = run(capsys, "remainders", "--base", files["base"], "--input", "q",
                           "--enum-cap", "2")
        assert code == 3 and "cap" in err
        code, _, _ = run(capsys, "revise-external", "--base", files["base"], "--input", "q", "--atom-cap", "1")
        assert code == 3

    def test_priority_required(self, capsys, files):
        code, _, err = run(capsys, "contract-package", "--base", files["base"], "--input", "q",
                           "--strategy", "topk:2")
        assert code == 2 and "priority" in err

    def test_missing_mode(self, capsys):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2


class TestCheck:
    def test_check_suite(self, capsys):
        code, out, _ = run(capsys, "check", "T4", "--samples", "30", "--seed", "7")
        data = json.loads(out)
        assert code == 0 and data["violated"] == 0 and data["instances"] == 30

    def test_check_is_byte_identical(self, capsys):
        _, first, _ = run(capsys, "check", "--theorem", "T5", "--samples", "15", "--seed", "4",
                          "--strategy", "topk:2")
        _, second, _ = run(capsys, "check", "--theorem", "T5", "--samples", "15", "--seed", "4",
                           "--strategy", "topk:2")
        assert first == second

    def test_known_discrepancy_reported(self, capsys):
        code, out, _ = run(capsys, "check", "T7", "--postulate", "relevance-as-printed",
                           "--samples", "40")
        data = json.loads(out)
        assert code == 0
        entry = data["known_discrepancies"]["T7.Relevance-as-printed"]
        assert entry["violated"] > 0 and entry["status"] == "known discrepancy"

    def test_unknown_theorem(self, capsys):
        code, _, _ = run(capsys, "check", "T9")
        assert code == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "choicerev", "revise-internal", "--base", files["base"],
                           "--input", "q,r", "--priority", files["prio"]],
                          capture_output=True, text=True, check=True)
    assert parse_base_text(proc.stdout) == BeliefBase(["p", "q"])
