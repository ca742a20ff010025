"""Claim: (m_K, m_K) gives independent forms exactly when v(1 - alpha) <= 0."""

import random
from fractions import Fraction
from typing import Any

from ..independence import check_independence, lemma5_check
from ..measure import haar
from ..padic import PAdicScalar
from ..sampling import random_unit
from .common import row, verdict_text

CLAIM = "(m_K, m_K) independent iff v(1 - alpha) <= 0"


def sample_alphas(p: int, count: int, seed: int = 0) -> list[PAdicScalar]:
    """alpha = 1 - p^w u with w cycling through -2..2 and u a random unit."""
    rng = random.Random(seed)
    alphas = []
    while len(alphas) < count:
        w = len(alphas) % 5 - 2
        value = 1 - random_unit(rng, p) * Fraction(p) ** w
        if value:
            alphas.append(PAdicScalar.of(value, p))
    return alphas


def check_haar_pair_criterion(quick: bool = False, seed: int = 0) -> list[dict[str, Any]]:
    """Compare the checker with the valuation criterion on random alpha.

    Args:
        quick: 15 alphas per prime instead of 60
        seed: Seed of the alpha generator

    Returns:
        One row per (p, m)
    """
    count = 15 if quick else 60
    rows = []
    for p in (2, 3):
        alphas = sample_alphas(p, count, seed)
        for m in (-1, 0, 1):
            mu = haar(p, m)
            mismatches = []
            for alpha in alphas:
                expected = lemma5_check(alpha, m)
                observed = check_independence(mu, mu, alpha).independent
                if observed != expected:
                    mismatches.append(f"alpha={alpha}: {verdict_text(observed)}")
            rows.append(
                row(
                    CLAIM,
                    f"p={p} m={m}, {len(alphas)} alphas",
                    not mismatches,
                    "checker agrees with the valuation criterion",
                    f"{len(mismatches)} disagreements",
                    ", ".join(mismatches[:5]),
                )
            )
    return rows
