"""Theorem checks, fixtures, the brute-force oracle and run reporting."""

from .base import CheckRequest, TheoremCheck
from .checks import default_registry
from .fixtures import list_fixtures, load_fixture
from .oracle import Oracle
from .output import VerifyMetrics, create_run_dir, format_summary
from .random_categories import random_documents
from .registry import CheckRegistry
from .report import ComparisonRow, Hypothesis, TheoremReport, Verdict
from .runner import VerifyRunner
from .theorems import (
    graded_categories,
    verify_closed_forms,
    verify_galois,
    verify_graded_decomposition,
    verify_skew_cohomology,
    verify_skew_group_algebra,
    verify_skew_homology,
)

__all__ = [
    "CheckRegistry",
    "CheckRequest",
    "ComparisonRow",
    "Hypothesis",
    "Oracle",
    "TheoremCheck",
    "TheoremReport",
    "Verdict",
    "VerifyMetrics",
    "VerifyRunner",
    "create_run_dir",
    "default_registry",
    "format_summary",
    "graded_categories",
    "list_fixtures",
    "load_fixture",
    "random_documents",
    "verify_closed_forms",
    "verify_galois",
    "verify_graded_decomposition",
    "verify_skew_cohomology",
    "verify_skew_group_algebra",
    "verify_skew_homology",
]
