"""Tests for the claim registry and the harness runner."""

import pytest

from cc_padic import harness
from cc_padic.claims import (
    ALL_CLAIMS,
    check_annihilator_law,
    check_counterexample_grid,
    check_haar_charfn,
    check_named_examples,
    check_pairing_agreement,
)
from cc_padic.claims.common import row
from cc_padic.harness import ClaimResult, run_harness


def test_registry_names_are_unique():
    names = [name for name, _ in ALL_CLAIMS]
    assert len(names) == len(set(names))
    assert all(callable(func) for _, func in ALL_CLAIMS)


@pytest.mark.parametrize(
    "claim",
    [
        check_pairing_agreement,
        check_annihilator_law,
        check_haar_charfn,
        check_named_examples,
        check_counterexample_grid,
    ],
)
def test_cheap_claims_pass_in_quick_mode(claim):
    rows = claim(quick=True)
    assert rows
    assert all(r["passed"] for r in rows), [r for r in rows if not r["passed"]]


def test_row_shape():
    r = row("claim", "case", False, "x", "y")
    assert r["status"] == "FAIL"
    assert r["details"] == ""
    assert set(r) == {"claim", "case", "passed", "status", "expected", "observed", "details"}


class TestClaimResult:
    def test_status(self):
        assert ClaimResult("a", rows=[row("a", "c", True, "", "")]).status == "PASS"
        assert ClaimResult("a", rows=[row("a", "c", False, "", "")]).status == "FAIL"
        assert ClaimResult("a", error="ValueError: boom").status == "ERROR"

    def test_no_rows_is_not_a_pass(self):
        assert ClaimResult("a").status == "FAIL"


class TestRunHarness:
    def test_only_filter(self):
        results = run_harness(quick=True, only=["pairing"])
        assert [r.name for r in results] == ["Pairing: closed form vs digit sum"]
        assert results[0].status == "PASS"

    def test_raising_claim_is_recorded_and_run_continues(self, monkeypatch):
        def broken(quick=False):
            raise ValueError("boom")

        def fine(quick=False):
            return [row("fine", "only case", True, "ok", "ok")]

        monkeypatch.setattr(harness, "ALL_CLAIMS", [("Broken", broken), ("Fine", fine)])
        messages = []
        results = run_harness(progress_callback=messages.append)

        assert [r.status for r in results] == ["ERROR", "PASS"]
        assert results[0].error == "ValueError: boom"
        assert messages[0] == "Checking Broken..."
        assert "Checking Fine..." in messages
        assert messages[-1] == "Harness complete. 1 of 2 claims passed."

    def test_quick_flag_reaches_claims(self, monkeypatch):
        seen = []

        def claim(quick=False):
            seen.append(quick)
            return [row("c", "c", True, "", "")]

        monkeypatch.setattr(harness, "ALL_CLAIMS", [("C", claim)])
        run_harness(quick=True)
        assert seen == [True]


@pytest.mark.slow
def test_full_quick_harness_passes():
    results = run_harness(quick=True)
    assert len(results) == len(ALL_CLAIMS)
    assert all(r.status == "PASS" for r in results), [(r.name, r.error, r.failures[:2]) for r in results if not r.passed]
