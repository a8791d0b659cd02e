"""Batch verification of the library's constructive claims."""

from verification.checks import CHECKS
from verification.runner import CheckResult, VerificationRunner
from verification.tables import census_frame, summary_frame

__all__ = ["CHECKS", "CheckResult", "VerificationRunner", "census_frame", "summary_frame"]
