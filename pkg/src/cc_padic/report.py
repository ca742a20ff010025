"""Reports printed by the CLI, as text or as stable JSON.

Every number in a report is an exact literal ("1/2", "-3") or an integer
count; there are no floats, so two runs on the same input print the
same bytes. The JSON layout is described in docs/REPORT_SCHEMA.md.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .costs import format_count
from .independence import IndependenceVerdict
from .padic import INF
from .theorem import TheoremCase

SCHEMA_VERSION = 1


@dataclass
class Report:
    command: str
    p: int | None = None
    alpha: str | None = None
    label: str | None = None
    case: dict[str, Any] | None = None
    distributions: dict[str, str] | None = None
    idempotent: dict[str, bool] | None = None
    verdict: dict[str, Any] | None = None
    oracle: dict[str, Any] | None = None
    value: dict[str, Any] | None = None
    claims: list[dict[str, Any]] | None = None
    config: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """False when a harness claim failed or the oracle disagreed with the checker."""
        if self.claims is not None and any(c["status"] != "PASS" for c in self.claims):
            return False
        if self.oracle is not None and self.verdict is not None:
            return self.oracle.get("agrees", True)
        return True


def _level(level) -> int | str:
    return "inf" if level is INF else level


def case_to_dict(case: TheoremCase) -> dict[str, Any]:
    out: dict[str, Any] = {
        "tag": case.tag,
        "k": case.k,
        "c0": case.c0,
        "conclusion": case.conclusion,
        "reduced_negative_k": case.reduced_negative_k,
    }
    if case.witnesses is not None:
        out["witnesses"] = {"mu1": str(case.witnesses[0]), "mu2": str(case.witnesses[1])}
    return out


def verdict_to_dict(verdict: IndependenceVerdict) -> dict[str, Any]:
    window = verdict.window
    return {
        "independent": verdict.independent,
        "conclusive": verdict.conclusive,
        "method": verdict.method,
        "witness": None if verdict.witness is None else [str(x) for x in verdict.witness],
        "window": {
            "w_low": window.w_low,
            "w_high": window.w_high,
            "classes": window.classes,
            "resolution": _level(window.resolution),
            "exact": window.exact,
        },
        "reduced_negative_k": verdict.reduced_negative_k,
        "pairs_checked": verdict.pairs_checked,
        "probes_checked": verdict.probes_checked,
        "audited": verdict.audited,
        "notes": list(verdict.notes),
    }


def claim_to_dict(result) -> dict[str, Any]:
    """A harness ClaimResult as a plain dict (seconds are left out to keep output stable)."""
    return {
        "name": result.name,
        "status": result.status,
        "checks": len(result.rows),
        "failed": len(result.failures),
        "error": result.error,
        "rows": result.rows,
    }


def _prune(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _prune(v) for k, v in value.items() if v is not None}
    if isinstance(value, list):
        return [_prune(v) for v in value]
    return value


def to_json(report: Report) -> str:
    data = _prune(asdict(report))
    data["schema"] = SCHEMA_VERSION
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _verdict_lines(title: str, verdict: dict[str, Any]) -> list[str]:
    state = "independent" if verdict["independent"] else "dependent"
    if verdict["independent"] and not verdict["conclusive"]:
        state += " (on the checked window only)"
    window = verdict["window"]
    lines = [
        f"{title}: {state}",
        f"  method: {verdict['method']}, window L{window['w_low']}/L{window['w_high']} "
        f"({format_count(window['classes'])} classes, {format_count(verdict['pairs_checked'])} pairs checked)",
    ]
    if verdict.get("witness"):
        u, v = verdict["witness"]
        lines.append(f"  witness: u = {u}, v = {v}")
    for note in verdict.get("notes", []):
        lines.append(f"  note: {note}")
    return lines


def to_text(report: Report) -> str:
    lines = []
    header = f"cc_padic {report.command}"
    if report.p is not None:
        header += f"  p={report.p}"
    if report.alpha is not None:
        header += f"  alpha={report.alpha}"
    if report.label:
        header += f"  [{report.label}]"
    lines.append(header)

    if report.case:
        case = report.case
        lines.append(f"case: {case['tag']} (k={case['k']}, c0={case['c0']})")
        lines.append(f"  {case['conclusion']}")
        if "witnesses" in case:
            lines.append(f"  witness mu1 = {case['witnesses']['mu1']}")
            lines.append(f"  witness mu2 = {case['witnesses']['mu2']}")
    if report.distributions:
        for name, text in report.distributions.items():
            idempotent = ""
            if report.idempotent and name in report.idempotent:
                idempotent = "  (idempotent)" if report.idempotent[name] else "  (not idempotent)"
            lines.append(f"{name} = {text}{idempotent}")
    if report.verdict:
        lines.extend(_verdict_lines("verdict", report.verdict))
    if report.oracle:
        lines.extend(_verdict_lines("oracle", report.oracle))
        if "agrees" in report.oracle:
            lines.append(f"  agrees with checker: {'yes' if report.oracle['agrees'] else 'NO'}")
    if report.value:
        lines.append(f"mu^({report.value['at']}) = {report.value['value']}")
        if report.value.get("terms"):
            for angle, coefficient in report.value["terms"]:
                lines.append(f"  {coefficient} * exp(2 pi i * {angle})")
    if report.claims is not None:
        width = max((len(c["name"]) for c in report.claims), default=0)
        for claim in report.claims:
            lines.append(
                f"[{claim['status']:5}] {claim['name']:<{width}}  "
                f"{claim['checks'] - claim['failed']}/{claim['checks']} checks"
            )
            if claim.get("error"):
                lines.append(f"        error: {claim['error']}")
            for r in claim["rows"]:
                if not r["passed"]:
                    lines.append(f"        FAIL {r['case']}: expected {r['expected']}, got {r['observed']}")
    if report.config is not None:
        lines.append(f"config: {json.dumps(report.config)}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
