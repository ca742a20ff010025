"""Classification of alpha and the finite falsification harness.

classify() tells which structural conclusion independence of
L1 = xi1 + xi2 and L2 = xi1 + alpha xi2 forces. verify_case() runs the
exact checker over a fixed family of distributions and asserts that
conclusion on every independent pair it finds. This tests the
statements on a finite family only; it proves nothing about the rest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .case_info import (
    CASE_COUNTEREXAMPLE,
    CASE_K0_DEGENERATE,
    CASE_K0_IDEMPOTENT,
    CASE_K1,
    get_conclusion,
)
from .errors import CounterexampleError
from .independence import IndependenceVerdict, check_independence
from .logging_config import get_logger
from .measure import (
    Distribution,
    degenerate,
    haar,
    idempotent_level,
    is_degenerate,
    is_idempotent,
    mixture,
    pushforward,
)
from .padic import PAdicScalar, Prime, as_prime, decompose_automorphism

log = get_logger("theorem")

FAMILY_LEVELS = (-1, 0, 1)
FAMILY_WEIGHTS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
FAMILY_SHIFTS = (0, 1)

Member = tuple[str, Distribution]


@dataclass(frozen=True, slots=True)
class TheoremCase:
    """Which conclusion applies to alpha = p^k c, c0 = c mod p."""

    alpha: PAdicScalar
    k: int
    c0: int
    tag: str
    conclusion: str
    witnesses: tuple[Distribution, Distribution] | None = None
    reduced_negative_k: bool = False


@dataclass(frozen=True, slots=True)
class PairOutcome:
    label1: str
    label2: str
    independent: bool
    conclusive: bool
    holds: bool | None
    detail: str = ""


@dataclass(frozen=True, slots=True)
class CaseReport:
    """Result of verify_case: every pair checked, independent ones annotated."""

    case: TheoremCase
    outcomes: tuple[PairOutcome, ...] = field(default=())

    @property
    def independent_pairs(self) -> list[PairOutcome]:
        return [o for o in self.outcomes if o.independent]

    @property
    def violations(self) -> list[PairOutcome]:
        return [o for o in self.outcomes if o.holds is False]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True, slots=True)
class NamedExample:
    """A concrete configuration with its expected outcome."""

    label: str
    alpha: PAdicScalar
    mu1: Distribution
    mu2: Distribution
    independent: bool
    idempotent: tuple[bool, bool]


# -- classification -----------------------------------------------------------


def build_counterexample(
    prime: Prime | int, k: int, a: Fraction | int | str = Fraction(1, 2)
) -> tuple[Distribution, Distribution]:
    """Two non-idempotent distributions with independent L1, L2 for v(alpha) = k.

    mu1 = a m_{Lambda_1} + (1 - a) m_{Lambda_{-k+2}}
    mu2 = a m_{Lambda_{-k+2}} + (1 - a) m_{Lambda_{-k+1}}

    Negative k is replaced by |k|; use counterexample_for() to get the pair
    in the coordinates of a given alpha.

    Raises:
        CounterexampleError: |k| < 2 or a outside (0, 1)
    """
    prime = as_prime(prime)
    if abs(k) < 2:
        raise CounterexampleError(f"the construction needs |k| >= 2, got k={k}")
    a = Fraction(a)
    if not 0 < a < 1:
        raise CounterexampleError(f"weight a must lie strictly between 0 and 1, got {a}")
    k = abs(k)
    mu1 = mixture(prime, (a, 1), (1 - a, -k + 2))
    mu2 = mixture(prime, (a, -k + 2), (1 - a, -k + 1))
    log.debug(f"counterexample p={prime.p} k={k} a={a}: mu1 = {mu1}; mu2 = {mu2}")
    return mu1, mu2


def counterexample_for(
    alpha: PAdicScalar, a: Fraction | int | str = Fraction(1, 2)
) -> tuple[Distribution, Distribution]:
    """build_counterexample for the actual alpha, undoing the k < 0 reduction.

    For v(alpha) < 0 the pair (nu1, nu2) built for 1/alpha is mapped back
    to (nu1, alpha^-1 nu2), since (mu1, mu2, alpha) and
    (mu1, alpha mu2, 1/alpha) describe the same pair of forms.
    """
    nu1, nu2 = build_counterexample(alpha.prime, alpha.valuation, a)
    if alpha.valuation > 0:
        return nu1, nu2
    return nu1, pushforward(1 / alpha, nu2)


def classify(alpha: PAdicScalar) -> TheoremCase:
    """Case tag of alpha.

    Raises:
        NotAutomorphismError: alpha = 0
    """
    d = decompose_automorphism(alpha)
    if d.k == 0:
        tag = CASE_K0_DEGENERATE if d.c0 == 1 else CASE_K0_IDEMPOTENT
    elif abs(d.k) == 1:
        tag = CASE_K1
    else:
        tag = CASE_COUNTEREXAMPLE
    witnesses = counterexample_for(alpha) if tag == CASE_COUNTEREXAMPLE else None
    case = TheoremCase(
        alpha=alpha,
        k=d.k,
        c0=d.c0,
        tag=tag,
        conclusion=get_conclusion(tag),
        witnesses=witnesses,
        reduced_negative_k=d.k < 0,
    )
    log.info(f"alpha={alpha}: k={d.k}, c0={d.c0} -> {tag}")
    return case


# -- structure predicates -----------------------------------------------------


def remark1_shape(mu1: Distribution, mu2: Distribution) -> bool:
    """Both are shifts of the Haar distribution of one and the same ball."""
    level1 = idempotent_level(mu1)
    return level1 is not None and level1 == idempotent_level(mu2)


def conclusion_holds(tag: str, mu1: Distribution, mu2: Distribution) -> bool | None:
    """The case conclusion for an independent pair; None when nothing is asserted."""
    if tag == CASE_K0_DEGENERATE:
        return is_degenerate(mu1) and is_degenerate(mu2)
    if tag == CASE_K0_IDEMPOTENT:
        return remark1_shape(mu1, mu2)
    if tag == CASE_K1:
        return is_idempotent(mu1) or is_idempotent(mu2)
    return None


# -- families -----------------------------------------------------------------


def default_family(prime: Prime | int) -> list[Member]:
    """Centered two-ball mixtures, single shifted balls and two point masses."""
    prime = as_prime(prime)
    members: list[Member] = []
    for low, high in itertools.combinations(FAMILY_LEVELS, 2):
        for a in FAMILY_WEIGHTS:
            members.append(
                (f"{a}*m[L{low}]+{1 - a}*m[L{high}]", mixture(prime, (a, low), (1 - a, high)))
            )
    for level in FAMILY_LEVELS:
        for shift in FAMILY_SHIFTS:
            members.append((f"m[{shift}+L{level}]", haar(prime, level, shift)))
    for shift in FAMILY_SHIFTS:
        members.append((f"E[{shift}]", degenerate(prime, shift)))
    return members


def family_pairs(members: list[Member]) -> list[tuple[Member, Member]]:
    """Every ordered pair, the diagonal included."""
    return list(itertools.product(members, repeat=2))


def verify_case(
    alpha: PAdicScalar,
    pairs: list[tuple[Member, Member]],
    progress_callback: Callable[[str], None] | None = None,
    margin_low: int = 2,
) -> CaseReport:
    """Check every pair and assert the case conclusion on the independent ones.

    Failed assertions are reported in the outcome list, never raised.
    """
    case = classify(alpha)
    outcomes = []
    for n, ((label1, mu1), (label2, mu2)) in enumerate(pairs, start=1):
        verdict: IndependenceVerdict = check_independence(mu1, mu2, alpha, margin_low=margin_low)
        holds = conclusion_holds(case.tag, mu1, mu2) if verdict.independent else None
        detail = ""
        if holds is False:
            detail = f"independent but not '{case.conclusion}'"
            log.warning(f"alpha={alpha}: ({label1}, {label2}) {detail}")
        outcomes.append(
            PairOutcome(
                label1=label1,
                label2=label2,
                independent=verdict.independent,
                conclusive=verdict.conclusive,
                holds=holds,
                detail=detail,
            )
        )
        if progress_callback and n % 50 == 0:
            progress_callback(f"alpha={alpha}: {n}/{len(pairs)} pairs")
    report = CaseReport(case, tuple(outcomes))
    log.info(
        f"alpha={alpha} ({case.tag}): {len(report.independent_pairs)} independent of "
        f"{len(pairs)} pairs, {len(report.violations)} violations"
    )
    return report


def named_examples(prime: Prime | int) -> list[NamedExample]:
    """Concrete configurations with known outcomes, one per case of the classification.

    The |k| = 1 pair is given for c = 1 and for a second unit (c = 2, or
    c = 3 when p = 2).
    """
    prime = as_prime(prime)
    p = prime.p

    def scalar(q: int) -> PAdicScalar:
        return PAdicScalar.of(q, prime)

    half = Fraction(1, 2)
    examples = []

    if p > 2:
        examples.append(
            NamedExample(
                label="unit alpha=2, c0 != 1: (m[L0], m[L0])",
                alpha=scalar(2),
                mu1=haar(prime, 0),
                mu2=haar(prime, 0),
                independent=True,
                idempotent=(True, True),
            )
        )

    for c in (1, 3 if p == 2 else 2):
        examples.append(
            NamedExample(
                label=f"k=1, alpha={c * p}: (m[L1], 1/2 m[L1] + 1/2 m[L0])",
                alpha=scalar(c * p),
                mu1=haar(prime, 1),
                mu2=mixture(prime, (half, 1), (half, 0)),
                independent=True,
                idempotent=(True, False),
            )
        )

    examples.append(
        NamedExample(
            label="sum and difference, alpha=-1: (m[L0], m[L0])",
            alpha=scalar(-1),
            mu1=haar(prime, 0),
            mu2=haar(prime, 0),
            independent=p > 2,
            idempotent=(True, True),
        )
    )

    mu1, mu2 = build_counterexample(prime, 2, half)
    examples.append(
        NamedExample(
            label=f"k=2, alpha={p * p}: constructed non-idempotent pair",
            alpha=scalar(p * p),
            mu1=mu1,
            mu2=mu2,
            independent=True,
            idempotent=(False, False),
        )
    )
    return examples


__all__ = [
    "CaseReport",
    "NamedExample",
    "PairOutcome",
    "TheoremCase",
    "build_counterexample",
    "classify",
    "conclusion_holds",
    "counterexample_for",
    "default_family",
    "family_pairs",
    "idempotent_level",
    "named_examples",
    "remark1_shape",
    "verify_case",
]
