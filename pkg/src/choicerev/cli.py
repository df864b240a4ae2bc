"""Command-line front end: ``choicerev MODE [THEOREM] [options]``."""

from __future__ import annotations

import argparse
import json
import sys

from .formats import parse_base_text, parse_input_list, read_base, read_priority, render_base
from .logic import BeliefBase, CapacityError, ParseError, use_caps
from .operators import (
    choice_contract, consistent_expand, external_choice_revise,
    internal_choice_revise, mum_external, mum_internal, package_contract,
    partial_expand,
)
from .postulates import SUITES, GeneratorConfig, run_suite
from .postulates.predicates import resolve_name
from .remainders import (
    PreconditionError, choice_remainders, choice_remainders_vs_negation,
    negation_set, package_remainders, package_remainders_vs_negation, partial_sums,
)
from .selection import PriorityOrder, SelectionStrategy, StrategyKind

__all__ = ["main", "build_parser"]

MODES = (
    "contract-package", "contract-choice", "expand", "revise-internal",
    "revise-external", "mum-internal", "mum-external", "remainders", "check",
)

KINDS = {
    "package": "package", "⊥": "package",
    "choice": "choice", "∠": "choice",
    "partial": "partial", "⋈": "partial",
    "negation": "negation", "n": "negation",
    "choice-negation": "choice-negation", "∠n": "choice-negation",
    "package-negation": "package-negation", "⊥n": "package-negation",
}

EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_VIOLATION = 1


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="choicerev",
        description="Apply choice-revision operators to belief bases and run postulate suites.",
    )
    p.add_argument("mode_pos", nargs="?", metavar="MODE", choices=MODES, help=" | ".join(MODES))
    p.add_argument("theorem_pos", nargs="?", metavar="THEOREM",
                   help="suite for the check mode: " + ", ".join(SUITES))
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--theorem")
    p.add_argument("--base", help="belief-base file, one formula per line ('-' for stdin)")
    p.add_argument("--input", help="comma-separated input formulas")
    p.add_argument("--input-file", help="input formulas in belief-base format")
    p.add_argument("--strategy", default="full", help="full | maxichoice | topk[:k] (default full)")
    p.add_argument("--priority", help="priority file of 'rank formula' lines")
    p.add_argument("--kind", default="package", help="remainders kind: " + ", ".join(sorted(set(KINDS.values()))))
    p.add_argument("--consistent", action="store_true", help="expand mode: keep the result consistent when possible")
    p.add_argument("--postulate", action="append", help="check mode: restrict to this postulate (repeatable)")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--atom-cap", type=int)
    p.add_argument("--enum-cap", type=int)
    p.add_argument("--output", choices=("text", "json"), default="text")
    return p


def _strategy(spec: str, priority: PriorityOrder | None, required: bool) -> SelectionStrategy:
    name, _, k = spec.partition(":")
    try:
        kind = StrategyKind(name.lower())
    except ValueError:
        raise UsageError(f"unknown strategy {spec!r}") from None
    if kind is not StrategyKind.FULL and priority is None and required:
        raise UsageError(f"strategy {name} needs --priority")
    priority = priority or PriorityOrder()
    if kind is StrategyKind.TOP_K:
        return SelectionStrategy.top_k(int(k) if k else 2, priority)
    if k:
        raise UsageError(f"strategy {name} takes no parameter")
    return SelectionStrategy(kind, 1, priority)


def _read_base(path: str | None) -> BeliefBase:
    if path is None:
        return BeliefBase()
    if path == "-":
        return parse_base_text(sys.stdin.read())
    return read_base(path)


def _read_input(args) -> BeliefBase:
    if args.input is not None and args.input_file is not None:
        raise UsageError("give --input or --input-file, not both")
    if args.input_file is not None:
        return read_base(args.input_file)
    return parse_input_list(args.input or "")


def _emit_base(base: BeliefBase, args, payload: dict, comments: list[str]) -> None:
    if args.output == "json":
        print(json.dumps({**payload, "result": base.texts()}, indent=2, sort_keys=True))
        return
    for line in comments:
        print(f"# {line}")
    sys.stdout.write(render_base(base))


def _cmd_operator(mode: str, args) -> int:
    K = _read_base(args.base)
    A = _read_input(args)
    priority = read_priority(args.priority) if args.priority else None
    strategy = _strategy(args.strategy, priority, required=True)
    payload = {"mode": mode, "strategy": strategy.label, "K": K.texts(), "A": A.texts()}
    comments = [f"mode: {mode}", f"strategy: {strategy.label}"]
    if not A:
        _emit_base(K, args, payload, comments + ["empty input: base unchanged"])
        return 0
    if mode in ("revise-internal", "revise-external"):
        revise = internal_choice_revise if mode == "revise-internal" else external_choice_revise
        trace = revise(K, A, strategy)
        payload.update({k: v for k, v in trace.to_json().items() if k != "mode"})
        comments += [f"stage1: {trace.stage1}", f"aux: {trace.aux}"]
        _emit_base(trace.result, args, payload, comments)
        return 0
    if mode.startswith("mum-"):
        if len(A) != 1:
            raise UsageError(f"{mode} takes exactly one input formula")
        op = mum_internal if mode == "mum-internal" else mum_external
        _emit_base(op(K, A.formulas[0], strategy), args, payload, comments)
        return 0
    ops = {
        "contract-package": package_contract,
        "contract-choice": choice_contract,
        "expand": consistent_expand if args.consistent else partial_expand,
    }
    _emit_base(ops[mode](K, A, strategy), args, payload, comments)
    return 0


def _cmd_remainders(args) -> int:
    K = _read_base(args.base)
    A = _read_input(args)
    kind = KINDS.get(args.kind)
    if kind is None:
        raise UsageError(f"unknown kind {args.kind!r}")
    if kind == "negation":
        clauses = negation_set(A).clauses.texts()
        if args.output == "json":
            print(json.dumps(clauses))
        else:
            sys.stdout.write("".join(f"{c}\n" for c in clauses))
        return 0
    build = {
        "package": package_remainders, "choice": choice_remainders, "partial": partial_sums,
        "choice-negation": choice_remainders_vs_negation,
        "package-negation": package_remainders_vs_negation,
    }[kind]
    family = build(K, A)
    if args.output == "json":
        print(json.dumps(family.as_lists()))
    else:
        print(f"# {kind}: {len(family)} member(s)")
        for member in family:
            print("{" + ", ".join(member.texts()) + "}")
    return 0


def _cmd_check(args) -> int:
    theorem = (args.theorem or args.theorem_pos or "").upper()
    if theorem not in SUITES:
        raise UsageError(f"check needs a theorem: {', '.join(SUITES)}")
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    strategy = _strategy(args.strategy, None, required=False)
    names = None
    if args.postulate:
        try:
            names = [resolve_name(n, theorem) for n in args.postulate]
        except KeyError as err:
            raise UsageError(err.args[0]) from None
    config = GeneratorConfig(num=args.samples, seed=args.seed)
    summary = run_suite(theorem, config, strategy, names)
    print(summary.dumps())
    return 0 if summary.ok else EXIT_VIOLATION


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    mode = args.mode or args.mode_pos
    if mode is None:
        parser.error("a mode is required")
    if args.theorem_pos and mode != "check":
        parser.error("THEOREM is only valid with the check mode")
    caps = {}
    if args.atom_cap is not None:
        caps["atoms"] = args.atom_cap
    if args.enum_cap is not None:
        caps["remainder_base"] = caps["partial_sum"] = args.enum_cap
    try:
        with use_caps(**caps):
            if mode == "remainders":
                return _cmd_remainders(args)
            if mode == "check":
                return _cmd_check(args)
            return _cmd_operator(mode, args)
    except ParseError as err:
        print(f"choicerev: parse error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as err:
        print(f"choicerev: capacity exceeded: {err}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, PreconditionError, OSError) as err:
        print(f"choicerev: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
