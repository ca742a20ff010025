"""Claims that tie independent code paths together on random configurations."""

import random
from typing import Any

from ..independence import check_independence
from ..measure import convolve, degenerate, pushforward, symmetrize
from ..oracle import oracle_check
from ..sampling import random_alpha, random_ball_mixture, random_scalar
from .common import row, verdict_text


def check_oracle_agreement(quick: bool = False, seed: int = 0) -> list[dict[str, Any]]:
    """Exact checker and joint-law oracle agree on random ball mixtures.

    Args:
        quick: 40 configurations instead of 200
        seed: Seed of the configuration generator

    Returns:
        One row per prime
    """
    count = 40 if quick else 200
    rng = random.Random(seed)
    disagreements: dict[int, list[str]] = {2: [], 3: []}
    totals = {2: 0, 3: 0}
    for _ in range(count):
        p = rng.choice((2, 3))
        mu1 = random_ball_mixture(rng, p)
        mu2 = random_ball_mixture(rng, p)
        alpha = random_alpha(rng, p, (-2, 2))
        checker = check_independence(mu1, mu2, alpha).independent
        oracle = oracle_check(mu1, mu2, alpha).independent
        totals[p] += 1
        if checker != oracle:
            disagreements[p].append(
                f"alpha={alpha} mu1={mu1} mu2={mu2}: checker {verdict_text(checker)}"
            )
    return [
        row(
            "checker and oracle agree",
            f"p={p}, {totals[p]} random ball mixtures",
            not disagreements[p],
            "identical verdicts",
            f"{len(disagreements[p])} disagreements",
            "; ".join(disagreements[p][:3]),
        )
        for p in (2, 3)
    ]


def check_invariance(quick: bool = False, seed: int = 1) -> list[dict[str, Any]]:
    """Verdicts survive translation, a common dilation and (when independent) symmetrization."""
    count = 20 if quick else 100
    rng = random.Random(seed)
    failures: dict[str, list[str]] = {"translation": [], "dilation": [], "symmetrization": []}
    for _ in range(count):
        p = rng.choice((2, 3))
        mu1 = random_ball_mixture(rng, p, levels=(-1, 1), max_components=2)
        mu2 = random_ball_mixture(rng, p, levels=(-1, 1), max_components=2)
        alpha = random_alpha(rng, p, (-1, 2))
        base = check_independence(mu1, mu2, alpha).independent
        label = f"p={p} alpha={alpha} mu1={mu1} mu2={mu2}"

        x1 = degenerate(p, random_scalar(rng, p, -2, 2))
        x2 = degenerate(p, random_scalar(rng, p, -2, 2))
        moved = check_independence(convolve(mu1, x1), convolve(mu2, x2), alpha).independent
        if moved != base:
            failures["translation"].append(label)

        gamma = random_scalar(rng, p, -1, 1)
        scaled = check_independence(pushforward(gamma, mu1), pushforward(gamma, mu2), alpha).independent
        if scaled != base:
            failures["dilation"].append(label)

        if base:
            sym = check_independence(symmetrize(mu1), symmetrize(mu2), alpha).independent
            if not sym:
                failures["symmetrization"].append(label)

    return [
        row(
            "verdict invariance",
            f"{kind}, {count} random configurations",
            not found,
            "verdict unchanged",
            f"{len(found)} changes",
            "; ".join(found[:3]),
        )
        for kind, found in failures.items()
    ]
