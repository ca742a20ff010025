"""Shared fixtures and hypothesis strategies."""

import logging
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cc_padic.measure import haar, mixture
from cc_padic.padic import PAdicScalar, Prime

PRIMES = (2, 3, 5)


@pytest.fixture(autouse=True)
def reset_logging():
    """The CLI attaches handlers once per process; drop them after each test."""
    yield
    logger = logging.getLogger("cc_padic")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()


@pytest.fixture(params=PRIMES)
def prime(request):
    return Prime(request.param)


@pytest.fixture
def p3():
    return Prime(3)


@pytest.fixture
def constructed_pair(p3):
    """The constructed non-idempotent pair for p = 3, k = 2, a = 1/2."""
    half = Fraction(1, 2)
    mu1 = mixture(p3, (half, 1), (half, 0))
    mu2 = mixture(p3, (half, 0), (half, -1))
    return mu1, mu2


@pytest.fixture
def unit_ball(p3):
    return haar(p3, 0)


def units(p: int):
    """Nonzero rationals a/b with p dividing neither a nor b."""
    return st.builds(
        Fraction,
        st.integers(min_value=-500, max_value=500).filter(lambda a: a % p != 0),
        st.integers(min_value=1, max_value=60).filter(lambda b: b % p != 0),
    )


def scalars(p: int, lo: int = -6, hi: int = 6, zero: bool = False):
    """PAdicScalar strategy with valuation in [lo, hi] (optionally also 0)."""
    nonzero = st.builds(
        lambda u, v: PAdicScalar(Prime(p), u * Fraction(p) ** v),
        units(p),
        st.integers(min_value=lo, max_value=hi),
    )
    if zero:
        return st.one_of(st.just(PAdicScalar(Prime(p), Fraction(0))), nonzero)
    return nonzero
