"""Claims about what independence forces on mu1 and mu2, swept over a fixed family."""

from typing import Any

from ..case_info import CASE_K0_DEGENERATE, CASE_K0_IDEMPOTENT, CASE_K1
from ..independence import check_independence, stabilizing_level
from ..measure import haar, is_idempotent, mixture
from ..padic import PAdicScalar
from ..theorem import (
    CaseReport,
    Member,
    default_family,
    family_pairs,
    named_examples,
    remark1_shape,
    verify_case,
)
from .common import row, verdict_text


def _family(p: int, quick: bool) -> list[Member]:
    members = default_family(p)
    return members[::3] if quick else members


def _case_row(claim: str, report: CaseReport, expected_tag: str) -> dict[str, Any]:
    case = report.case
    violations = report.violations
    return row(
        claim,
        f"p={case.alpha.p} alpha={case.alpha}",
        case.tag == expected_tag and not violations,
        f"{expected_tag}: {case.conclusion}",
        f"{case.tag}: {len(report.independent_pairs)} independent of {len(report.outcomes)} pairs, "
        f"{len(violations)} violations",
        ", ".join(f"({o.label1}, {o.label2})" for o in violations[:5]),
    )


def check_unit_alpha(quick: bool = False) -> list[dict[str, Any]]:
    """k = 0: independent pairs are idempotent of one ball, degenerate when c0 = 1."""
    configs = ((3, 2, CASE_K0_IDEMPOTENT), (3, 4, CASE_K0_DEGENERATE), (2, 3, CASE_K0_DEGENERATE))
    rows = []
    for p, alpha, tag in configs:
        report = verify_case(PAdicScalar.of(alpha, p), family_pairs(_family(p, quick)))
        rows.append(_case_row("unit alpha forces idempotent or degenerate pairs", report, tag))
    return rows


def check_k_one(quick: bool = False) -> list[dict[str, Any]]:
    """|k| = 1: some member is idempotent, and the other one need not be."""
    rows = []
    for p in (2, 3):
        second = 3 if p == 2 else 2
        for c in (1, second):
            alpha = PAdicScalar.of(c * p, p)
            report = verify_case(alpha, family_pairs(_family(p, quick)))
            rows.append(_case_row("|k| = 1 forces one idempotent member", report, CASE_K1))

            mu1 = haar(p, 1)
            mu2 = mixture(p, ("1/2", 1), ("1/2", 0))
            verdict = check_independence(mu1, mu2, alpha)
            passed = verdict.independent and is_idempotent(mu1) and not is_idempotent(mu2)
            rows.append(
                row(
                    "|k| = 1 allows a non-idempotent member",
                    f"p={p} alpha={alpha}",
                    passed,
                    "independent, mu2 not idempotent",
                    f"{verdict_text(verdict.independent)}, mu2 idempotent={is_idempotent(mu2)}",
                    f"mu1 = {mu1}; mu2 = {mu2}",
                )
            )
    return rows


def check_sum_difference(quick: bool = False) -> list[dict[str, Any]]:
    """alpha = -1: degenerate pairs only for p = 2, shifted Haar pairs for p > 2."""
    rows = []
    for p in (2, 3):
        alpha = PAdicScalar.of(-1, p)
        report = verify_case(alpha, family_pairs(_family(p, quick)))
        expected_tag = CASE_K0_DEGENERATE if p == 2 else CASE_K0_IDEMPOTENT
        rows.append(_case_row("sum and difference independent", report, expected_tag))
        if p > 2:
            mu = haar(p, 0)
            verdict = check_independence(mu, mu, alpha)
            rows.append(
                row(
                    "sum and difference independent",
                    f"p={p}: (m[L0], m[L0])",
                    verdict.independent and remark1_shape(mu, mu),
                    "independent, shifted Haar of one ball",
                    verdict_text(verdict.independent),
                )
            )
    return rows


def check_named_examples(quick: bool = False) -> list[dict[str, Any]]:
    """Every named configuration has its documented verdict and idempotence pattern."""
    rows = []
    for p in (2, 3) if quick else (2, 3, 5):
        for example in named_examples(p):
            verdict = check_independence(example.mu1, example.mu2, example.alpha)
            idempotent = (is_idempotent(example.mu1), is_idempotent(example.mu2))
            rows.append(
                row(
                    "named examples",
                    f"p={p}: {example.label}",
                    verdict.independent == example.independent and idempotent == example.idempotent,
                    f"{verdict_text(example.independent)}, idempotent={example.idempotent}",
                    f"{verdict_text(verdict.independent)}, idempotent={idempotent}",
                )
            )
    return rows


def check_stabilizing_level(quick: bool = False) -> list[dict[str, Any]]:
    """Independent pairs with nonnegative characteristic functions have a common
    subgroup Lambda_l where both equal 1, and both live in Lambda_(1-l)."""
    rows = []
    for p, alpha_value in ((3, 3), (3, 2), (2, 2)):
        alpha = PAdicScalar.of(alpha_value, p)
        failures = []
        checked = 0
        for (label1, mu1), (label2, mu2) in family_pairs(_family(p, quick)):
            if any(not c.shift.is_zero() for c in mu1.components + mu2.components):
                continue
            verdict = check_independence(mu1, mu2, alpha)
            if not verdict.independent:
                continue
            checked += 1
            level = stabilizing_level(mu1, mu2, verdict.window)
            supported = level is not None and all(
                c.is_point or c.level >= 1 - level for c in mu1.components + mu2.components
            )
            if not supported:
                failures.append(f"({label1}, {label2}): l={level}")
        rows.append(
            row(
                "common stabilizing subgroup",
                f"p={p} alpha={alpha}, {checked} centered independent pairs",
                not failures,
                "l exists and both supports lie in Lambda_(1-l)",
                f"{len(failures)} exceptions",
                ", ".join(failures[:5]),
            )
        )
    return rows
