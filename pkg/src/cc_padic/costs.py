"""Enumeration cost estimates for the checker and the oracle.

Counts are exact: they are what a run will enumerate in the worst case
(no early exit on the first violation).
"""

from .independence import VerificationWindow
from .measure import Distribution
from .oracle import QuotientWindow


def checker_pair_count(window: VerificationWindow, has_point_mass: bool = False) -> int:
    """Grid pairs plus deep probes.

    Args:
        window: Character window of the run
        has_point_mass: Whether either distribution carries an atom (probes run only then)

    Returns:
        Number of (u, v) evaluations
    """
    total = window.pairs
    if has_point_mass and window.deep_probes:
        deep = window.deep_probes * (window.p - 1)
        total += deep * 2 * (window.classes + deep)
    return total


def support_size(mu: Distribution, window: QuotientWindow) -> int:
    """Cosets of the quotient that mu charges, counted with multiplicity per component."""
    count = 0
    for c in mu.components:
        if c.is_point:
            count += 1
        else:
            count += window.p ** max(0, window.hi - c.level)
    return count


def oracle_pair_count(mu1: Distribution, mu2: Distribution, window: QuotientWindow) -> int:
    """Support pairs enumerated by the joint law (an upper bound after merging)."""
    return min(support_size(mu1, window), window.size) * min(support_size(mu2, window), window.size)


def format_count(n: int) -> str:
    """Format an enumeration count for display.

    Args:
        n: Count

    Returns:
        Formatted string like "729", "59.0k" or "1.6M"
    """
    if n < 1000:
        return str(n)
    elif n < 1_000_000:
        return f"{n / 1000:.1f}k"
    else:
        return f"{n / 1_000_000:.1f}M"


# Rough desk-scale limits used to warn before long enumerations
PAIR_LIMITS = {
    "comfortable": 100_000,
    "slow": 2_000_000,
}


def cost_label(n: int) -> str:
    """'ok', 'slow' or 'very slow' for a pair count."""
    if n <= PAIR_LIMITS["comfortable"]:
        return "ok"
    elif n <= PAIR_LIMITS["slow"]:
        return "slow"
    return "very slow"
