"""Claim: for |k| >= 2 there are independent pairs with no idempotent member."""

from typing import Any

from ..independence import check_independence
from ..measure import is_idempotent
from ..oracle import oracle_check
from ..padic import PAdicScalar
from ..theorem import build_counterexample
from .common import row, verdict_text

CLAIM = "non-idempotent independent pair for |k| >= 2"

# (p, k, a)
ACCEPTANCE_GRID = (
    (2, 2, "1/2"),
    (2, 3, "1/2"),
    (3, 2, "1/3"),
    (5, 2, "1/2"),
)


def check_counterexample_grid(quick: bool = False) -> list[dict[str, Any]]:
    """Build the pair for each (p, k, a) and confirm it with the checker and the oracle.

    Args:
        quick: Only the first two grid points

    Returns:
        One row per grid point
    """
    grid = ACCEPTANCE_GRID[:2] if quick else ACCEPTANCE_GRID
    rows = []
    for p, k, a in grid:
        mu1, mu2 = build_counterexample(p, k, a)
        alpha = PAdicScalar.of(p**k, p)
        verdict = check_independence(mu1, mu2, alpha)
        oracle = oracle_check(mu1, mu2, alpha)
        idempotent = (is_idempotent(mu1), is_idempotent(mu2))
        passed = verdict.independent and oracle.independent and not any(idempotent)
        rows.append(
            row(
                CLAIM,
                f"p={p} k={k} a={a}",
                passed,
                "independent (checker and oracle), neither idempotent",
                f"checker {verdict_text(verdict.independent)}, oracle {verdict_text(oracle.independent)}, "
                f"idempotent={idempotent}",
                f"mu1 = {mu1}; mu2 = {mu2}",
            )
        )
    return rows
