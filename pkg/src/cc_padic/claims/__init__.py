"""Checks of the independence results, one function per claim.

Every claim function takes quick (smaller sweeps) and returns a list of
rows built by claims.common.row. They are listed in ALL_CLAIMS in the
order the harness runs them, cheapest first.
"""

from .agreement import check_invariance, check_oracle_agreement
from .characters import check_annihilator_law, check_haar_charfn, check_pairing_agreement
from .counterexample import check_counterexample_grid
from .haar_pairs import check_haar_pair_criterion
from .structure import (
    check_k_one,
    check_named_examples,
    check_stabilizing_level,
    check_sum_difference,
    check_unit_alpha,
)

ALL_CLAIMS = [
    ("Pairing: closed form vs digit sum", check_pairing_agreement),
    ("Annihilator law", check_annihilator_law),
    ("Haar characteristic function", check_haar_charfn),
    ("Named examples", check_named_examples),
    ("Haar pair criterion", check_haar_pair_criterion),
    ("Non-idempotent pair for |k| >= 2", check_counterexample_grid),
    ("Unit alpha", check_unit_alpha),
    ("|k| = 1", check_k_one),
    ("Sum and difference", check_sum_difference),
    ("Common stabilizing subgroup", check_stabilizing_level),
    ("Checker vs oracle", check_oracle_agreement),
    ("Invariance", check_invariance),
]


__all__ = [
    "ALL_CLAIMS",
    "check_annihilator_law",
    "check_counterexample_grid",
    "check_haar_charfn",
    "check_haar_pair_criterion",
    "check_invariance",
    "check_k_one",
    "check_named_examples",
    "check_oracle_agreement",
    "check_pairing_agreement",
    "check_stabilizing_level",
    "check_sum_difference",
    "check_unit_alpha",
]
