"""Run every registered claim and collect the results."""

import time
import traceback
from dataclasses import dataclass, field
from typing import Any, Callable

from .claims import ALL_CLAIMS
from .logging_config import get_logger

log = get_logger("harness")


@dataclass
class ClaimResult:
    """Outcome of one claim: its rows, or the error that stopped it."""

    name: str
    rows: list[dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0
    error: str | None = None

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [r for r in self.rows if not r["passed"]]

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.rows) and not self.failures

    @property
    def status(self) -> str:
        if self.error is not None:
            return "ERROR"
        return "PASS" if self.passed else "FAIL"


def run_harness(
    progress_callback: Callable[[str], None] | None = None,
    quick: bool = False,
    only: list[str] | None = None,
) -> list[ClaimResult]:
    """Run the claims in registry order.

    A claim that raises is recorded as ERROR and the run continues with
    the next one.

    Args:
        progress_callback: Optional callback for progress updates
        quick: Smaller sweeps for every claim
        only: Restrict to claims whose name contains one of these strings

    Returns:
        One ClaimResult per claim that ran
    """
    log.info(f"Starting harness ({'quick' if quick else 'full'} sweeps)")
    results = []

    def update_progress(msg: str):
        log.info(msg)
        if progress_callback:
            progress_callback(msg)

    for name, claim_func in ALL_CLAIMS:
        if only and not any(part.lower() in name.lower() for part in only):
            continue
        update_progress(f"Checking {name}...")
        start = time.perf_counter()
        result = ClaimResult(name)
        try:
            result.rows = claim_func(quick=quick) or []
            log.info(f"{name}: {len(result.rows)} rows, {len(result.failures)} failed")
        except Exception as e:
            result.error = f"{type(e).__name__}: {e}"
            log.warning(f"Claim {name} failed: {e}")
            log.debug(traceback.format_exc())
        result.seconds = time.perf_counter() - start
        results.append(result)

    failed = sum(1 for r in results if not r.passed)
    update_progress(f"Harness complete. {len(results) - failed} of {len(results)} claims passed.")
    return results
