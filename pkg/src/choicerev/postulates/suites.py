"""Run every postulate of a theorem over a generated corpus."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..selection import SelectionStrategy
from .generator import GeneratorConfig, generate_instances
from .predicates import POSTULATES, Verdict, make_operator, resolve_name

__all__ = ["SUITES", "SuiteSummary", "run_suite"]

SUITES: dict[str, list[str]] = {}
for _name in POSTULATES:
    SUITES.setdefault(_name.split(".", 1)[0], []).append(_name)

MAX_WITNESSES = 5


@dataclass
class SuiteSummary:
    theorem: str
    strategy: str
    instances: int = 0
    holds: int = 0
    violated: int = 0
    inapplicable: int = 0
    postulates: dict = field(default_factory=dict)
    known_discrepancies: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violated == 0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "strategy": self.strategy,
            "instances": self.instances,
            "holds": self.holds,
            "violated": self.violated,
            "inapplicable": self.inapplicable,
            "postulates": self.postulates,
            "known_discrepancies": self.known_discrepancies,
            "witnesses": self.witnesses,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _tally() -> dict:
    return {"holds": 0, "violated": 0, "inapplicable": 0}


def run_suite(theorem: str, config: GeneratorConfig,
              strategy: SelectionStrategy | None = None,
              postulates: list[str] | None = None) -> SuiteSummary:
    """Check every postulate of ``theorem`` on every generated instance.

    Postulates flagged as known discrepancies are tallied separately
    and never count as violations.  ``postulates`` restricts the run to the
    named ones (qualified or relative to ``theorem``).
    """
    theorem = theorem.upper()
    if theorem not in SUITES:
        raise KeyError(f"unknown suite {theorem!r}; choose from {', '.join(SUITES)}")
    strategy = strategy or SelectionStrategy.full()
    names = SUITES[theorem] if postulates is None else [resolve_name(n, theorem) for n in postulates]
    summary = SuiteSummary(theorem, strategy.label)
    for name in names:
        bucket = summary.known_discrepancies if POSTULATES[name].discrepancy else summary.postulates
        bucket[name] = _tally()
        if POSTULATES[name].discrepancy:
            bucket[name].update(status="known discrepancy", note=POSTULATES[name].note)
    for inst in generate_instances(config, strategy):
        summary.instances += 1
        operators = {}
        for name in names:
            postulate = POSTULATES[name]
            if postulate.target not in operators:
                operators[postulate.target] = make_operator(postulate.target, inst.strategy)
            outcome = postulate.check(operators[postulate.target], inst)
            key = outcome.verdict.name.lower()
            if postulate.discrepancy:
                summary.known_discrepancies[name][key] += 1
                continue
            summary.postulates[name][key] += 1
            setattr(summary, key, getattr(summary, key) + 1)
            if outcome.verdict is Verdict.VIOLATED and len(summary.witnesses) < MAX_WITNESSES:
                summary.witnesses.append({"postulate": name, "instance": inst.to_json(),
                                          "witness": outcome.witness, "detail": outcome.detail})
    return summary
