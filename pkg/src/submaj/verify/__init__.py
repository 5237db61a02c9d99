"""Random instance generation and theorem checks."""

from .generators import random_graph_pair, random_subspace, random_symmetric
from .suite import (
    CheckReport,
    DimConfig,
    SuiteConfig,
    check,
    parse_theorem_list,
    replay,
    run_suite,
    run_trial,
    suite_passed,
    theorem_id,
)
from .theorems import REGISTRY, TheoremId, Trial

__all__ = [
    "CheckReport",
    "DimConfig",
    "REGISTRY",
    "SuiteConfig",
    "TheoremId",
    "Trial",
    "check",
    "parse_theorem_list",
    "random_graph_pair",
    "random_subspace",
    "random_symmetric",
    "replay",
    "run_suite",
    "run_trial",
    "suite_passed",
    "theorem_id",
]
