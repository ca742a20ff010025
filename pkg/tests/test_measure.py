"""Tests for distributions, their characteristic functions and operations."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cc_padic.characters import annihilator_level, character_value
from cc_padic.errors import DistributionError, NotAutomorphismError, PrimeMismatchError
from cc_padic.measure import (
    Component,
    canonical_density,
    canonical_form,
    charfn_eval,
    charfn_profile,
    common_shift,
    convolve,
    degenerate,
    haar,
    idempotent_level,
    is_degenerate,
    is_idempotent,
    make_component,
    make_distribution,
    mixture,
    pushforward,
    reflect,
    strip_shifts,
    support,
    symmetrize,
)
from cc_padic.padic import INF, PAdicScalar, Prime

from conftest import scalars

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def s(value, p=3):
    return PAdicScalar.of(value, p)


class TestConstruction:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(DistributionError, match="5/6"):
            make_distribution([(HALF, 0, 0), (THIRD, 0, 1)], prime=3)

    def test_empty(self):
        with pytest.raises(DistributionError):
            make_distribution([], prime=3)

    @pytest.mark.parametrize("weight", [0, -1, Fraction(3, 2)])
    def test_bad_weight(self, weight):
        with pytest.raises(DistributionError):
            make_component(weight, 0, 0, 3)

    def test_bad_level(self):
        with pytest.raises(DistributionError):
            Component(Fraction(1), s(0), 1.5)

    def test_prime_is_inferred(self):
        mu = make_distribution([(1, s(2), None)])
        assert mu.p == 3
        assert mu.has_point_mass
        with pytest.raises(DistributionError):
            make_distribution([(1, 0, 0)])

    def test_mixed_primes(self):
        with pytest.raises(PrimeMismatchError):
            make_distribution([Component(Fraction(1), PAdicScalar.of(0, 5), 0)], prime=3)

    def test_shorthands(self):
        mu = mixture(3, (HALF, 1), (HALF, None, "2"))
        assert mu.finite_levels() == [1]
        assert mu.point_mass_weight == HALF
        assert str(mu) == "1/2*m[0+L1] + 1/2*E[2]"
        assert str(haar(2, -1, "1/2")) == "1*m[1/2+L-1]"


class TestCharFn:
    @given(st.data())
    def test_haar_is_indicator_of_annihilator(self, data):
        p = data.draw(st.sampled_from([2, 3]))
        k = data.draw(st.integers(min_value=-2, max_value=2))
        y = data.draw(scalars(p, -4, 4, zero=True))
        expected = 1 if y.valuation >= annihilator_level(k) else 0
        assert charfn_eval(haar(p, k), y) == expected

    def test_point_mass_is_a_character(self):
        y = s(1)
        assert charfn_eval(degenerate(3, 1), y) == character_value(s(1), y)
        assert not charfn_eval(degenerate(3, 1), y).is_rational()

    def test_mixture_values(self, constructed_pair):
        mu1, _ = constructed_pair
        # levels 1 and 0: thresholds 0 and 1
        assert charfn_eval(mu1, s(3)) == 1
        assert charfn_eval(mu1, s(1)) == HALF
        assert charfn_eval(mu1, s("1/3")) == 0

    def test_profile(self, constructed_pair):
        _, mu2 = constructed_pair
        profile = charfn_profile(mu2)
        assert profile.thresholds == (1, 2)
        assert profile.value_at(0) == 0
        assert profile.value_at(1) == HALF
        assert profile.value_at(5) == 1
        assert profile.value_at(INF) == 1

    def test_profile_tail_is_point_mass_weight(self):
        profile = charfn_profile(mixture(5, (Fraction(1, 4), None), (Fraction(3, 4), 0)))
        assert profile.tail == Fraction(1, 4)
        assert profile.value_at(-10) == Fraction(1, 4)

    def test_profile_ignores_shifts(self):
        centered = mixture(3, (HALF, 1), (HALF, None))
        shifted = mixture(3, (HALF, 1, "1/9"), (HALF, None, 2))
        assert charfn_profile(shifted) == charfn_profile(centered)
        assert hash(charfn_profile(shifted)) == hash(charfn_profile(centered))

    def test_prime_mismatch(self):
        with pytest.raises(PrimeMismatchError):
            charfn_eval(haar(3, 0), PAdicScalar.of(1, 5))


class TestOperations:
    def test_convolution_of_balls(self):
        assert convolve(haar(3, 0), haar(3, 1)) == canonical_form(haar(3, 0))

    def test_convolution_of_points(self):
        assert convolve(degenerate(3, 1), degenerate(3, 2)) == canonical_form(degenerate(3, 3))

    def test_convolution_shifts_ball(self):
        mu = convolve(degenerate(3, 4), haar(3, 1))
        assert mu == canonical_form(haar(3, 1, 1))

    @given(st.data())
    def test_convolution_multiplies_charfns(self, data):
        p = 3
        mu = mixture(p, (HALF, 0, "1/3"), (HALF, None, 2))
        nu = mixture(p, (THIRD, -1), (2 * THIRD, 1, 5))
        y = data.draw(scalars(p, -4, 4, zero=True))
        assert charfn_eval(convolve(mu, nu), y) == charfn_eval(mu, y) * charfn_eval(nu, y)

    @given(st.data())
    def test_symmetrization_is_squared_modulus(self, data):
        mu = mixture(3, (HALF, 0, "1/3"), (HALF, None, 2))
        y = data.draw(scalars(3, -4, 4))
        value = charfn_eval(mu, y)
        assert charfn_eval(symmetrize(mu), y) == value * value.conjugate()

    def test_reflect(self):
        mu = reflect(mixture(3, (HALF, 0, 1), (HALF, None, "1/3")))
        assert [c.shift for c in mu.components] == [s(-1), s("-1/3")]

    def test_pushforward_moves_levels(self):
        mu = pushforward(s(9), mixture(3, (HALF, 0, 1), (HALF, None, 2)))
        assert [c.level for c in mu.components] == [2, INF]
        assert [c.shift for c in mu.components] == [s(9), s(18)]

    def test_pushforward_by_zero(self):
        with pytest.raises(NotAutomorphismError):
            pushforward(s(0), haar(3, 0))

    def test_canonical_form_merges_cosets(self):
        mu = mixture(3, (HALF, 0, 0), (HALF, 0, 3))
        assert canonical_form(mu).components == (Component(Fraction(1), s(0), 0),)

    def test_strip_shifts(self):
        mu = strip_shifts(mixture(3, (HALF, 0, 1), (HALF, None, 2)))
        assert all(c.shift.is_zero() for c in mu.components)

    def test_common_shift(self):
        x, centered = common_shift(mixture(3, (HALF, 0, 1), (HALF, 1, 4)))
        assert x == s(4)
        assert centered == mixture(3, (HALF, 0), (HALF, 1))
        assert common_shift(mixture(3, (HALF, None, 0), (HALF, None, 1))) is None
        assert common_shift(mixture(3, (HALF, 1, 0), (HALF, 1, 1))) is None

    def test_support(self, constructed_pair):
        mu1, _ = constructed_pair
        pieces = support(mu1)
        assert len(pieces) == 1
        assert pieces[0].level == 0
        assert len(support(mixture(3, (HALF, 1, 0), (HALF, 1, 1)))) == 2


class TestDensityAndIdempotence:
    def test_density_of_a_ball(self):
        density = canonical_density(haar(3, 0))
        assert density.level == 0
        assert density.cells == ((Fraction(0), Fraction(1)),)

    def test_density_splits_coarse_balls(self, constructed_pair):
        mu1, _ = constructed_pair
        density = canonical_density(mu1)
        assert density.level == 1
        assert dict(density.cells) == {
            Fraction(0): HALF + HALF * THIRD,
            Fraction(1): HALF * THIRD,
            Fraction(2): HALF * THIRD,
        }

    @pytest.mark.parametrize(
        "mu, idempotent, degenerate_",
        [
            (haar(3, 0), True, False),
            (haar(2, -2, "1/8"), True, False),
            (degenerate(5, "1/5"), True, True),
            (mixture(3, (HALF, None, 0), (HALF, None, 1)), False, False),
            (mixture(3, (THIRD, 1, 0), (THIRD, 1, 1), (THIRD, 1, 2)), True, False),
            (mixture(3, (THIRD, 1, 0), (THIRD, 1, 1), (THIRD, 1, "1/3")), False, False),
            (mixture(3, (HALF, 1), (HALF, 0)), False, False),
            (mixture(3, (HALF, 0), (HALF, None, 0)), False, False),
        ],
    )
    def test_predicates(self, mu, idempotent, degenerate_):
        assert is_idempotent(mu) is idempotent
        assert is_degenerate(mu) is degenerate_

    def test_equal_points_merge_into_a_degenerate(self):
        assert is_degenerate(mixture(2, (HALF, None, 1), (HALF, None, 1)))

    def test_wide_level_gap_is_decided_from_components(self):
        mu = mixture(5, (HALF, -40), (HALF, 40))
        assert idempotent_level(mu) is None
        assert not is_idempotent(mu)
        assert idempotent_level(mixture(5, (HALF, -40, 1), (HALF, -40, 1))) == -40

    def test_finer_pieces_merge_into_one_ball(self):
        ninth = Fraction(1, 9)
        pieces = [(THIRD, 1, 0)] + [(ninth, 2, x) for x in (1, 4, 7, 2, 5, 8)]
        assert idempotent_level(mixture(3, *pieces)) == 0
        shifted = [(w, level, PAdicScalar.of(x, 3) + PAdicScalar.of("1/3", 3)) for w, level, x in pieces]
        assert idempotent_level(mixture(3, *shifted)) == 0
        assert is_idempotent(mixture(3, *shifted))

    @pytest.mark.parametrize(
        "mu",
        [
            mixture(3, (THIRD, 1, 0), (Fraction(1, 9), 2, 1), (Fraction(1, 9), 2, 4), (Fraction(4, 9), 1, 2)),
            mixture(3, (HALF, 0), (HALF, -1)),
            mixture(3, (HALF, 2, 0), (HALF, 2, 3)),
            mixture(2, (HALF, 1, 0), (HALF, None, 1)),
        ],
    )
    def test_uneven_or_partial_pieces_are_not_idempotent(self, mu):
        assert idempotent_level(mu) is None

    def test_point_mass_level(self):
        assert idempotent_level(degenerate(3, 4)) is INF
        assert idempotent_level(mixture(3, (HALF, None, 1), (HALF, None, 2))) is None


def test_prime_fixture_builds_valid_balls(prime):
    assert is_idempotent(haar(prime, 0))
    assert charfn_eval(haar(prime, 0), PAdicScalar(prime, Fraction(1, prime.p))) == 0
    assert isinstance(prime, Prime)
