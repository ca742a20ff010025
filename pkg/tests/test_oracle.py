"""Tests for the finite-quotient joint-law oracle."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cc_padic.errors import PrimeMismatchError, WindowError
from cc_padic.independence import check_independence
from cc_padic.measure import degenerate, haar, mixture
from cc_padic.oracle import (
    QuotientWindow,
    joint_law,
    oracle_check,
    oracle_window,
    project_to_quotient,
    quotient_convolution,
)
from cc_padic.padic import PAdicScalar
from cc_padic.sampling import random_ball_mixture
from cc_padic.theorem import counterexample_for

NINTH = Fraction(1, 9)


def s(value, p=3):
    return PAdicScalar.of(value, p)


class TestQuotientWindow:
    def test_geometry(self):
        window = QuotientWindow(3, 0, 2)
        assert window.size == 9
        assert window.span == 2
        assert str(window) == "L0/L2"
        assert window.index(Fraction(5)) == 5
        assert window.rep(10) == 1

    def test_negative_levels(self):
        window = QuotientWindow(2, -1, 1)
        assert window.size == 4
        assert window.index(Fraction(3, 2)) == 3
        assert window.rep(1) == Fraction(1, 2)

    def test_dual(self):
        dual = QuotientWindow(3, 0, 2).dual()
        assert (dual.w_low, dual.w_high) == (-1, 1)

    def test_empty(self):
        with pytest.raises(WindowError):
            QuotientWindow(3, 2, 2)


class TestProjection:
    def test_unit_ball_is_uniform(self):
        q = project_to_quotient(haar(3, 0), QuotientWindow(3, 0, 2))
        assert len(q.probabilities) == 9
        assert set(q.probabilities.values()) == {NINTH}
        assert q.faithful

    def test_point_mass(self):
        q = project_to_quotient(degenerate(3, 5), QuotientWindow(3, 0, 2))
        assert q.probabilities == {Fraction(5): Fraction(1)}
        assert not q.faithful

    def test_weights_over_common_denominator(self, constructed_pair):
        mu1, _ = constructed_pair
        q = project_to_quotient(mu1, QuotientWindow(3, 0, 1))
        weights, denominator = q.weights()
        assert denominator == 6
        assert weights == {0: 4, 1: 1, 2: 1}

    @pytest.mark.parametrize(
        "mu, message",
        [
            (haar(3, -1), "larger"),
            (haar(3, 3), "finer"),
            (degenerate(3, "1/3"), "outside"),
        ],
    )
    def test_out_of_window(self, mu, message):
        with pytest.raises(WindowError, match=message):
            project_to_quotient(mu, QuotientWindow(3, 0, 2))

    def test_prime_mismatch(self):
        with pytest.raises(PrimeMismatchError):
            project_to_quotient(haar(5, 0), QuotientWindow(3, 0, 2))


class TestJointLaw:
    def test_invertible_map_factorizes(self):
        window = QuotientWindow(3, 0, 1)
        q = project_to_quotient(haar(3, 0), window)
        law = joint_law(q, q, s(2))
        assert law.factorizes()
        assert sum(law.probabilities.values()) == 1
        assert set(law.probabilities.values()) == {NINTH}

    def test_equal_forms_do_not_factorize(self):
        window = QuotientWindow(3, 0, 1)
        q = project_to_quotient(haar(3, 0), window)
        law = joint_law(q, q, s(4))
        assert not law.factorizes()
        assert law.first_violation() is not None
        marginal = law.marginal(0)
        assert set(marginal.probabilities.values()) == {Fraction(1, 3)}

    def test_alpha_must_preserve_the_quotient(self):
        q = project_to_quotient(haar(3, 0), QuotientWindow(3, 0, 1))
        with pytest.raises(WindowError):
            joint_law(q, q, s("1/3"))

    def test_windows_must_match(self):
        q1 = project_to_quotient(haar(3, 0), QuotientWindow(3, 0, 1))
        q2 = project_to_quotient(haar(3, 0), QuotientWindow(3, 0, 2))
        with pytest.raises(WindowError):
            joint_law(q1, q2, s(2))


def test_quotient_convolution():
    window = QuotientWindow(3, 0, 2)
    q = quotient_convolution(
        project_to_quotient(degenerate(3, 1), window),
        project_to_quotient(degenerate(3, 2), window),
    )
    assert q.probabilities == {Fraction(3): Fraction(1)}
    wrapped = quotient_convolution(
        project_to_quotient(degenerate(3, 8), window),
        project_to_quotient(degenerate(3, 4), window),
    )
    assert wrapped.probabilities == {Fraction(3): Fraction(1)}


def test_default_window(constructed_pair):
    mu1, mu2 = constructed_pair
    window = oracle_window(mu1, mu2, s(9))
    assert (window.lo, window.hi) == (-1, 1)
    assert oracle_window(mu1, mu2, s(9), level=3).hi == 3
    with pytest.raises(WindowError):
        oracle_window(mu1, mu2, s(9), level=-1)


class TestOracleCheck:
    def test_constructed_pair(self, constructed_pair):
        mu1, mu2 = constructed_pair
        verdict = oracle_check(mu1, mu2, s(9))
        assert verdict.independent
        assert verdict.conclusive
        assert verdict.method == "oracle"

    def test_dependent_unit_balls(self):
        verdict = oracle_check(haar(3, 0), haar(3, 0), s(4))
        assert not verdict.independent
        assert verdict.conclusive
        assert len(verdict.witness) == 2

    def test_negative_valuation(self):
        alpha = s("1/9")
        mu1, mu2 = counterexample_for(alpha)
        verdict = oracle_check(mu1, mu2, alpha)
        assert verdict.independent
        assert verdict.reduced_negative_k

    def test_point_masses_are_level_only(self):
        verdict = oracle_check(degenerate(3, 1), degenerate(3, 2), s(5))
        assert verdict.independent
        assert not verdict.conclusive
        assert any("point masses" in note for note in verdict.notes)

    def test_point_mass_with_ball(self):
        verdict = oracle_check(degenerate(3), haar(3, 0), s(9))
        assert not verdict.independent
        assert verdict.conclusive


ALPHAS = {2: ("3", "-1", "2", "6", "5", "1/2"), 3: ("2", "4", "-1", "3", "6", "9", "1/3")}
INTEGRAL_ALPHAS = {2: ("3", "-1", "2", "6", "5"), 3: ("2", "4", "-1", "3", "6", "9")}


def test_checker_and_oracle_agree_on_random_mixtures():
    rng = random.Random(5)
    for _ in range(30):
        p = rng.choice((2, 3))
        mu1 = random_ball_mixture(rng, p, levels=(-1, 1), max_components=2)
        mu2 = random_ball_mixture(rng, p, levels=(-1, 1), max_components=2)
        alpha = s(rng.choice(ALPHAS[p]), p)
        checker = check_independence(mu1, mu2, alpha)
        oracle = oracle_check(mu1, mu2, alpha)
        assert checker.independent == oracle.independent, (p, str(alpha), str(mu1), str(mu2))


def test_shifted_mixture_agrees():
    mu1 = mixture(3, (Fraction(1, 2), 1, 1), (Fraction(1, 2), 0, 1))
    mu2 = mixture(3, (Fraction(1, 2), 0, 2), (Fraction(1, 2), -1, 2))
    checker = check_independence(mu1, mu2, s(9))
    oracle = oracle_check(mu1, mu2, s(9))
    assert checker.independent and oracle.independent


def _mixture_pair(rng, p):
    return (
        random_ball_mixture(rng, p, levels=(-1, 1), max_components=2),
        random_ball_mixture(rng, p, levels=(-1, 1), max_components=2),
    )


@given(seed=st.integers(min_value=0, max_value=10_000), p=st.sampled_from([2, 3]))
def test_finer_quotient_keeps_the_verdict(seed, p):
    rng = random.Random(seed)
    mu1, mu2 = _mixture_pair(rng, p)
    alpha = s(rng.choice(ALPHAS[p]), p)
    window = oracle_window(mu1, mu2, alpha)
    base = oracle_check(mu1, mu2, alpha, window=window)
    finer = oracle_check(mu1, mu2, alpha, level=window.hi + 1)
    assert finer.independent == base.independent, (p, str(alpha), str(mu1), str(mu2))
    assert base.conclusive and finer.conclusive


@given(seed=st.integers(min_value=0, max_value=10_000), p=st.sampled_from([2, 3]))
def test_first_marginal_is_the_convolution(seed, p):
    rng = random.Random(seed)
    mu1, mu2 = _mixture_pair(rng, p)
    alpha = s(rng.choice(INTEGRAL_ALPHAS[p]), p)
    window = oracle_window(mu1, mu2, alpha)
    q1, q2 = project_to_quotient(mu1, window), project_to_quotient(mu2, window)
    assert joint_law(q1, q2, alpha).marginal(0) == quotient_convolution(q1, q2)
