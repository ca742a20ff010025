"""Row format shared by every claim check."""

from typing import Any


def row(
    claim: str,
    case: str,
    passed: bool,
    expected: str,
    observed: str,
    details: str = "",
) -> dict[str, Any]:
    """One checked instance of a claim, in the shape the harness and exporter read."""
    return {
        "claim": claim,
        "case": case,
        "passed": bool(passed),
        "status": "PASS" if passed else "FAIL",
        "expected": expected,
        "observed": observed,
        "details": details,
    }


def verdict_text(independent: bool) -> str:
    return "independent" if independent else "dependent"
