"""Seeded random p-adic scalars and distributions for audits and sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .measure import Distribution, make_component
from .padic import PAdicScalar, Prime, as_prime


def random_unit(rng: random.Random, prime: Prime | int, size: int = 3) -> Fraction:
    """A signed rational a/b with p dividing neither a nor b."""
    p = as_prime(prime).p
    while True:
        a = rng.randint(1, p**size)
        b = rng.randint(1, 24)
        if a % p and b % p:
            break
    sign = -1 if rng.random() < 0.5 else 1
    return sign * Fraction(a, b)


def random_scalar(rng: random.Random, prime: Prime | int, lo: int, hi: int) -> PAdicScalar:
    """Nonzero scalar with valuation uniform in [lo, hi]."""
    prime = as_prime(prime)
    v = rng.randint(lo, hi)
    return PAdicScalar(prime, random_unit(rng, prime) * Fraction(prime.p) ** v)


def random_alpha(rng: random.Random, prime: Prime | int, k_range: tuple[int, int]) -> PAdicScalar:
    """alpha = p^k c with k uniform in k_range and c a random unit."""
    return random_scalar(rng, prime, *k_range)


def random_weights(rng: random.Random, count: int) -> list[Fraction]:
    """count positive rationals with denominator dividing 12, summing to 1."""
    if count == 1:
        return [Fraction(1)]
    cuts = sorted(rng.sample(range(1, 12), count - 1))
    bounds = [0, *cuts, 12]
    return [Fraction(b - a, 12) for a, b in zip(bounds, bounds[1:])]


def random_ball_mixture(
    rng: random.Random,
    prime: Prime | int,
    levels: tuple[int, int] = (-2, 2),
    max_components: int = 3,
    shifted: bool = False,
) -> Distribution:
    """A mixture of up to max_components Haar balls with levels in the given range.

    With shifted=True every component gets the same random translate.
    """
    prime = as_prime(prime)
    count = rng.randint(1, max_components)
    shift = random_scalar(rng, prime, -2, 2) if shifted else PAdicScalar(prime, Fraction(0))
    components = [
        make_component(weight, shift, rng.randint(*levels), prime)
        for weight in random_weights(rng, count)
    ]
    return Distribution(prime, tuple(components))
