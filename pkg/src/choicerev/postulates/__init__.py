"""Executable postulates, instance generation and suite running."""

from .predicates import (
    POSTULATES, Instance, Outcome, Postulate, PostulateReport, Verdict,
    check_postulate, make_operator, recheck, redundancy_candidates,
)
from .generator import GeneratorConfig, formula_pool, generate_instances
from .suites import SUITES, SuiteSummary, run_suite

__all__ = [
    "POSTULATES", "Instance", "Outcome", "Postulate", "PostulateReport", "Verdict",
    "check_postulate", "make_operator", "recheck", "redundancy_candidates",
    "GeneratorConfig", "formula_pool", "generate_instances",
    "SUITES", "SuiteSummary", "run_suite",
]
