"""Tests for the seeded random generators."""

import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cc_padic.measure import is_idempotent
from cc_padic.sampling import random_alpha, random_ball_mixture, random_scalar, random_unit, random_weights


def test_same_seed_same_draws():
    first = [random_scalar(random.Random(7), 3, -4, 4) for _ in range(3)]
    second = [random_scalar(random.Random(7), 3, -4, 4) for _ in range(3)]
    assert first == second


@given(seed=st.integers(min_value=0, max_value=10_000), p=st.sampled_from([2, 3, 5]))
def test_units_and_valuations(seed, p):
    rng = random.Random(seed)
    unit = random_unit(rng, p)
    assert unit.numerator % p and unit.denominator % p
    x = random_scalar(rng, p, -3, 2)
    assert -3 <= x.valuation <= 2
    alpha = random_alpha(rng, p, (2, 2))
    assert alpha.valuation == 2


@given(seed=st.integers(min_value=0, max_value=10_000), count=st.integers(min_value=1, max_value=4))
def test_weights_sum_to_one(seed, count):
    weights = random_weights(random.Random(seed), count)
    assert len(weights) == count
    assert sum(weights) == 1
    assert all(w > 0 and (12 * w).denominator == 1 for w in weights)


@given(seed=st.integers(min_value=0, max_value=10_000))
def test_ball_mixture(seed):
    mu = random_ball_mixture(random.Random(seed), 3, levels=(-1, 2), max_components=3, shifted=True)
    assert 1 <= len(mu.components) <= 3
    assert sum(c.weight for c in mu.components) == Fraction(1)
    assert all(-1 <= c.level <= 2 for c in mu.components)
    assert len({c.shift for c in mu.components}) == 1
    if len(mu.components) == 1:
        assert is_idempotent(mu)
