"""Batch verification runner."""

import logging
import time
import traceback
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from config.checks import DEFAULT_CHECK_SUITE
from verification.checks import CHECKS

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, str], None]


@dataclass
class CheckResult:
    key: str
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0
    error: Optional[str] = None


class VerificationRunner:
    """Runs the enabled checks of a suite in order, reporting progress as it goes."""

    def __init__(self, suite: Optional[Dict[str, dict]] = None, progress: Optional[ProgressCallback] = None):
        self.suite = DEFAULT_CHECK_SUITE if suite is None else suite
        self.progress = progress or (lambda percent, message: None)

    def run(self) -> List[CheckResult]:
        enabled = [(key, entry) for key, entry in self.suite.items() if entry.get("enabled", True)]
        results = []
        for completed, (key, entry) in enumerate(enabled):
            name = entry.get("name", key)
            self.progress(int(100 * completed / max(len(enabled), 1)), f"Running: {name}...")
            results.append(self._run_one(key, entry))
        self.progress(100, "Done")
        logger.info(
            "Verification finished: %d/%d checks passed", sum(r.passed for r in results), len(results)
        )
        return results

    def _run_one(self, key: str, entry: dict) -> CheckResult:
        name = entry.get("name", key)
        params = {p: v for p, v in entry.items() if p not in ("name", "enabled")}
        start = time.perf_counter()
        try:
            check = CHECKS[key]
            passed, detail = check(**params)
        except Exception as exc:
            logger.error("Check %s raised %s", key, exc)
            return CheckResult(
                key, name, False, str(exc), time.perf_counter() - start, traceback.format_exc()
            )
        elapsed = time.perf_counter() - start
        logger.info("Check %s %s in %.2fs: %s", key, "passed" if passed else "FAILED", elapsed, detail)
        return CheckResult(key, name, passed, detail, elapsed)
