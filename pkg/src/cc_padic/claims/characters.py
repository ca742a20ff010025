"""Claims about the pairing and the characteristic function of a ball."""

import random
from fractions import Fraction
from typing import Any

from ..characters import annihilator_level, pairing, pairing_eq1
from ..measure import charfn_eval, haar
from ..padic import PAdicScalar
from ..sampling import random_scalar
from .common import row

PRIMES = (2, 3, 5)


def check_pairing_agreement(quick: bool = False, seed: int = 0) -> list[dict[str, Any]]:
    """Closed-form pairing against the digit-sum definition on random rationals.

    Args:
        quick: 100 pairs per prime instead of 1000
        seed: Seed of the pair generator

    Returns:
        One row per prime
    """
    count = 100 if quick else 1000
    rng = random.Random(seed)
    rows = []
    for p in PRIMES:
        mismatches = []
        for _ in range(count):
            x = random_scalar(rng, p, -6, 6)
            y = random_scalar(rng, p, -6, 6)
            if pairing(x, y) != pairing_eq1(x, y):
                mismatches.append(f"({x}, {y})")
        rows.append(
            row(
                "closed-form pairing equals the digit sum",
                f"p={p}, {count} random pairs",
                not mismatches,
                "0 mismatches",
                f"{len(mismatches)} mismatches",
                ", ".join(mismatches[:5]),
            )
        )
    return rows


def check_annihilator_law(quick: bool = False) -> list[dict[str, Any]]:
    """y kills every r p^m exactly when v(y) >= -m + 1."""
    rows = []
    for p in PRIMES[:2] if quick else PRIMES:
        failures = []
        for m in range(-3, 4):
            xs = [PAdicScalar.of(Fraction(r) * Fraction(p) ** m, p) for r in range(1, p)]
            for j in range(-m - 3, -m + 4):
                for s in range(1, p):
                    y = PAdicScalar.of(Fraction(s) * Fraction(p) ** j, p)
                    trivial = all(pairing(x, y).value == 0 for x in xs)
                    if trivial != (j >= annihilator_level(m)):
                        failures.append(f"m={m} y={y}")
        rows.append(
            row(
                "annihilator of Lambda_m is Lambda_(1-m)",
                f"p={p}, m in [-3, 3]",
                not failures,
                "pairing trivial iff v(y) >= 1 - m",
                f"{len(failures)} exceptions",
                ", ".join(failures[:5]),
            )
        )
    return rows


def check_haar_charfn(quick: bool = False) -> list[dict[str, Any]]:
    """The characteristic function of m_{Lambda_k} is the indicator of Lambda_{1-k}."""
    rows = []
    for p in (2, 3):
        failures = []
        for k in range(-2, 3):
            mu = haar(p, k)
            for v in range(-4, 5):
                y = PAdicScalar.of(Fraction(p) ** v, p)
                expected = 1 if v >= annihilator_level(k) else 0
                if charfn_eval(mu, y) != expected:
                    failures.append(f"k={k} v={v}")
            if charfn_eval(mu, PAdicScalar.of(0, p)) != 1:
                failures.append(f"k={k} y=0")
        rows.append(
            row(
                "Haar characteristic function is an indicator",
                f"p={p}, k in [-2, 2], v(y) in [-4, 4]",
                not failures,
                "m^(y) = [v(y) >= 1 - k]",
                f"{len(failures)} exceptions",
                ", ".join(failures[:5]),
            )
        )
    return rows
