"""Command-line front end.

    cc_padic classify -p 3 --alpha 9
    cc_padic counterexample -p 3 -k 2 -a 1/2 --out s2.json
    cc_padic check --config s2.json --oracle
    cc_padic charfn --config s2.json --which mu2 --at 1/9
    cc_padic oracle --config s2.json --level 3
    cc_padic harness --quick --xlsx harness.xlsx

Exit codes: 0 on success whatever the verdict, 2 on invalid input, 1 on
an internal failure (including a failed harness claim or a checker/oracle
disagreement).
"""

import argparse
import json
import sys
import traceback
from fractions import Fraction
from pathlib import Path

from . import __version__
from .config import Config, config_from_dict, config_to_dict, dump_config, parse_config
from .costs import checker_pair_count, cost_label, format_count, oracle_pair_count
from .errors import ConfigError, PadicError
from .exporter import export_to_csv, export_to_excel
from .harness import run_harness
from .independence import check_independence, reduce_negative_valuation, stabilizing_level
from .logging_config import get_logger, setup_logging
from .measure import canonical_form, charfn_eval, is_idempotent
from .oracle import oracle_check, oracle_window
from .padic import PAdicScalar, as_prime, format_literal, parse_scalar
from .report import Report, case_to_dict, claim_to_dict, to_json, to_text, verdict_to_dict
from .theorem import classify, counterexample_for

log = get_logger("cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits on its own; usage errors must go through run_command's exit codes."""

    def error(self, message):
        raise ConfigError(message)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("-v", "--verbose", action="store_true", help="Show INFO log messages on stderr")
    parser.add_argument("--log-dir", type=Path, default=None, help="Directory for the log file (default: ./logs)")
    parser.add_argument("--no-log-file", action="store_true", help="Do not write a log file")


def _add_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input", "either --config FILE or the inline options")
    group.add_argument("--config", type=Path, help="JSON config file")
    group.add_argument("-p", "--prime", type=int, help="Prime p (inline input)")
    group.add_argument("--alpha", help="alpha as a rational literal (inline input, or overrides the config)")
    group.add_argument("--mu1", help="Components of mu1 as a JSON list (inline input)")
    group.add_argument("--mu2", help="Components of mu2 as a JSON list (inline input)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="cc_padic",
        description="Independence of L1 = xi1 + xi2 and L2 = xi1 + alpha xi2 on the p-adic numbers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = commands.add_parser("classify", help="Case of alpha and its consequence")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("--alpha", required=True, help="alpha as a rational literal")
    _add_common(p)

    p = commands.add_parser("check", help="Decide independence for a config")
    _add_input(p)
    p.add_argument("--oracle", action="store_true", help="Cross-check with the quotient oracle")
    p.add_argument("--sample", type=int, default=0, metavar="N", help="Random audit points outside the window")
    p.add_argument("--seed", type=int, default=0, help="Seed for the random audit")
    p.add_argument("--margin-low", type=int, default=2, help="Extra levels below the resolution level")
    _add_common(p)

    p = commands.add_parser("counterexample", help="Build and verify the non-idempotent pair for |k| >= 2")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("-k", type=int, required=True, help="v(alpha); alpha = p^k")
    p.add_argument("-a", default="1/2", help="Mixture weight in (0, 1) (default: 1/2)")
    p.add_argument("--out", type=Path, help="Write the config to this file")
    _add_common(p)

    p = commands.add_parser("charfn", help="Evaluate a characteristic function")
    _add_input(p)
    p.add_argument("--which", choices=("mu1", "mu2"), default="mu1")
    p.add_argument("--at", required=True, help="Point y as a rational literal")
    _add_common(p)

    p = commands.add_parser("oracle", help="Joint-law verdict on a finite quotient")
    _add_input(p)
    p.add_argument("--level", type=int, default=None, help="Quotient level (default: the resolution level)")
    _add_common(p)

    p = commands.add_parser("harness", help="Run every claim of the theorem harness")
    p.add_argument("--quick", action="store_true", help="Smaller sweeps")
    p.add_argument("--only", action="append", metavar="NAME", help="Run claims whose name contains NAME")
    p.add_argument("--csv", type=Path, metavar="DIR", help="Write a CSV of all rows into DIR")
    p.add_argument("--xlsx", type=Path, metavar="FILE", help="Write an Excel workbook of all rows")
    _add_common(p)

    return parser


# -- input --------------------------------------------------------------------


def _inline_components(text: str | None, key: str):
    if text is None:
        raise ConfigError(f"missing --{key} (or give --config)")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"--{key}: JSON syntax error at column {e.colno}: {e.msg}") from e


def load_input(args: argparse.Namespace) -> Config:
    """Config from --config, or from -p/--alpha/--mu1/--mu2; --alpha overrides the file."""
    alpha = getattr(args, "alpha", None)
    if args.config is not None:
        if args.prime is not None or args.mu1 is not None or args.mu2 is not None:
            raise ConfigError("give either --config or the inline options -p/--mu1/--mu2, not both")
        config = parse_config(args.config)
        if alpha is None:
            return config
        data = config_to_dict(config)
        data["alpha"] = alpha
        return config_from_dict(data)

    if args.prime is None:
        raise ConfigError("missing -p (or give --config)")
    data = {
        "p": args.prime,
        "alpha": alpha if alpha is not None else "1",
        "mu1": _inline_components(args.mu1, "mu1"),
        "mu2": _inline_components(args.mu2, "mu2"),
    }
    return config_from_dict(data)


def _describe(report: Report, config: Config) -> None:
    report.p = config.p
    report.alpha = str(config.alpha)
    report.label = config.label
    report.distributions = {"mu1": str(config.mu1), "mu2": str(config.mu2)}
    report.idempotent = {"mu1": is_idempotent(config.mu1), "mu2": is_idempotent(config.mu2)}
    if config.forms is not None:
        report.notes.append(
            "forms (" + ", ".join(str(f) for f in config.forms) + f") reduced to alpha = {config.alpha}"
        )


def _oracle_dict(config: Config, verdict=None, level: int | None = None) -> dict:
    window = oracle_window(config.mu1, config.mu2, config.alpha, level=level)
    r1, r2, _, _ = reduce_negative_valuation(config.mu1, config.mu2, config.alpha)
    pairs = oracle_pair_count(r1, r2, window)
    result = oracle_check(config.mu1, config.mu2, config.alpha, window=window)
    out = verdict_to_dict(result)
    out["notes"].append(f"oracle cost: {format_count(pairs)} support pairs ({cost_label(pairs)})")
    if verdict is not None:
        agrees = result.independent == verdict.independent or (result.independent and not result.conclusive)
        out["agrees"] = agrees
        if not agrees:
            log.warning(f"checker says {verdict.independent}, oracle says {result.independent}")
    return out


# -- commands -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> Report:
    prime = as_prime(args.prime)
    alpha = parse_scalar(args.alpha, prime)
    case = classify(alpha)
    return Report("classify", p=prime.p, alpha=str(alpha), case=case_to_dict(case))


def cmd_check(args: argparse.Namespace) -> Report:
    config = load_input(args)
    report = Report("check")
    _describe(report, config)
    report.case = case_to_dict(classify(config.alpha))
    verdict = check_independence(
        config.mu1,
        config.mu2,
        config.alpha,
        sample_count=args.sample,
        seed=args.seed,
        margin_low=args.margin_low,
    )
    report.verdict = verdict_to_dict(verdict)
    pairs = checker_pair_count(verdict.window, config.mu1.has_point_mass or config.mu2.has_point_mass)
    report.notes.append(f"checker cost: {format_count(pairs)} evaluations ({cost_label(pairs)})")
    if verdict.independent:
        level = stabilizing_level(config.mu1, config.mu2, verdict.window)
        if level is not None:
            report.notes.append(f"both characteristic functions equal 1 on L{level}")
    if args.oracle:
        report.oracle = _oracle_dict(config, verdict)
    return report


def cmd_counterexample(args: argparse.Namespace) -> Report:
    prime = as_prime(args.prime)
    a = parse_scalar(args.a, prime).value
    alpha = PAdicScalar(prime, Fraction(prime.p) ** args.k)
    mu1, mu2 = counterexample_for(alpha, a)
    label = f"non-idempotent pair p={prime.p} k={args.k} a={format_literal(a)}"
    config = Config(prime, alpha, mu1, mu2, label)

    report = Report("counterexample")
    text = dump_config(config, args.out)
    if args.out is not None:
        reread = parse_config(args.out)
        report.notes.append(f"config written to {args.out}")
    else:
        reread = config_from_dict(json.loads(text))
        report.config = config_to_dict(config)
    if (canonical_form(reread.mu1), canonical_form(reread.mu2)) != (canonical_form(mu1), canonical_form(mu2)):
        raise RuntimeError("config round trip changed the distributions")

    _describe(report, reread)
    report.case = case_to_dict(classify(alpha))
    verdict = check_independence(reread.mu1, reread.mu2, reread.alpha)
    report.verdict = verdict_to_dict(verdict)
    report.oracle = _oracle_dict(reread, verdict)
    return report


def cmd_charfn(args: argparse.Namespace) -> Report:
    config = load_input(args)
    mu = config.mu1 if args.which == "mu1" else config.mu2
    y = parse_scalar(args.at, config.prime)
    value = charfn_eval(mu, y)
    report = Report("charfn", p=config.p, label=config.label)
    report.distributions = {args.which: str(mu)}
    report.value = {
        "at": str(y),
        "value": str(value),
        "terms": [[str(angle), format_literal(c)] for angle, c in value.terms()],
    }
    return report


def cmd_oracle(args: argparse.Namespace) -> Report:
    config = load_input(args)
    report = Report("oracle")
    _describe(report, config)
    report.oracle = _oracle_dict(config, level=args.level)
    return report


def cmd_harness(args: argparse.Namespace) -> Report:
    progress = None if args.json else (lambda msg: print(msg, file=sys.stderr))
    results = run_harness(progress_callback=progress, quick=args.quick, only=args.only)
    if not results:
        raise ConfigError(f"no claim matches {args.only}")
    report = Report("harness", claims=[claim_to_dict(r) for r in results])
    if args.csv is not None:
        path = export_to_csv(results, args.csv)
        report.notes.append(f"CSV written to {path}")
    if args.xlsx is not None:
        path = export_to_excel(results, args.xlsx)
        report.notes.append(f"workbook written to {path}")
    return report


COMMANDS = {
    "classify": cmd_classify,
    "check": cmd_check,
    "counterexample": cmd_counterexample,
    "charfn": cmd_charfn,
    "oracle": cmd_oracle,
    "harness": cmd_harness,
}


def run_command(argv: list[str] | None = None) -> int:
    """Parse argv, run one subcommand, print its report, return the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID

    setup_logging(log_dir=args.log_dir, verbose=args.verbose, log_file=not args.no_log_file)
    log.debug(f"argv: {argv if argv is not None else sys.argv[1:]}")

    try:
        report = COMMANDS[args.command](args)
    except PadicError as e:
        log.debug(traceback.format_exc())
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as e:
        log.error(f"internal failure: {type(e).__name__}: {e}")
        log.debug(traceback.format_exc())
        print(f"error: internal failure: {e}", file=sys.stderr)
        return EXIT_FAILURE

    sys.stdout.write(to_json(report) if args.json else to_text(report))
    return EXIT_OK if report.ok else EXIT_FAILURE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
