"""Tests for enumeration cost estimates."""

import pytest

from cc_padic.costs import (
    checker_pair_count,
    cost_label,
    format_count,
    oracle_pair_count,
    support_size,
)
from cc_padic.independence import VerificationWindow
from cc_padic.measure import degenerate
from cc_padic.oracle import QuotientWindow


@pytest.mark.parametrize(
    "n, text",
    [(0, "0"), (729, "729"), (59_049, "59.0k"), (1_594_323, "1.6M")],
)
def test_format_count(n, text):
    assert format_count(n) == text


@pytest.mark.parametrize(
    "n, label",
    [(6_561, "ok"), (100_000, "ok"), (100_001, "slow"), (2_000_000, "slow"), (2_000_001, "very slow")],
)
def test_cost_label(n, label):
    assert cost_label(n) == label


def test_checker_pair_count():
    window = VerificationWindow(p=3, w_low=-2, w_high=2)
    assert checker_pair_count(window) == 6_561
    # two deep probe levels, p - 1 unit digits each, paired against the grid and each other
    assert checker_pair_count(window, has_point_mass=True) == 6_561 + 4 * 2 * (81 + 4)


def test_oracle_pair_count(constructed_pair):
    window = QuotientWindow(3, -1, 1)
    mu1, mu2 = constructed_pair
    assert support_size(mu1, window) == 4
    assert support_size(mu2, window) == 12
    assert oracle_pair_count(mu1, mu2, window) == 4 * 9


def test_point_mass_has_one_coset():
    assert support_size(degenerate(3, 5), QuotientWindow(3, 0, 4)) == 1
