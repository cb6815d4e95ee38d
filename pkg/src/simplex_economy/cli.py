"""Command-line front end.

Exit codes: 0 ok, 1 I/O or parse failure, 2 invalid economy, 3 valid but
not minimal, 4 supporting-price anomaly, 5 generation failure. Reports go
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import report as rep
from .equilibrium import PriceSystemError, solve_equilibrium, verify_equilibrium_sampled
from .files import FileFormatError, dump_economy, load_economy
from .gen import GenerationFailed, GenSpec, generate_economy
from .model import EconomyError, StochasticPolicy, validate_economy

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_NOT_MINIMAL = 3
EXIT_PRICE = 4
EXIT_GENERATION = 5


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str, normalize: bool):
    policy = StochasticPolicy.NORMALIZE if normalize else StochasticPolicy.EXACT
    try:
        doc = load_economy(path)
    except OSError as exc:
        raise _Failure(EXIT_PARSE, f"cannot read {path}: {exc.strerror or exc}") from None
    except (FileFormatError, UnicodeDecodeError) as exc:
        raise _Failure(EXIT_PARSE, f"{path}: {exc}") from None
    try:
        econ = validate_economy(doc.W, doc.sigma, policy)
    except EconomyError as exc:
        raise _Failure(EXIT_INVALID, f"{path}: invalid economy: {exc}") from None
    return econ, policy


def _emit(args, report: dict, table: str) -> None:
    if args.format == "machine":
        sys.stdout.write(rep.to_json(report))
    else:
        sys.stdout.write(table)


def cmd_validate(args) -> int:
    econ, policy = _load(args.file, args.normalize)
    section = rep.validation_section(econ, policy)
    _emit(args, {"validation": section}, rep.validation_table(section))
    return EXIT_OK


def _solve(econ):
    try:
        return solve_equilibrium(econ)
    except PriceSystemError as exc:
        raise _Failure(EXIT_PRICE, f"supporting price: {exc}") from None


def cmd_check_minimal(args) -> int:
    econ, policy = _load(args.file, args.normalize)
    result = _solve(econ)
    report = {
        "validation": rep.validation_section(econ, policy),
        "groups": rep.groups_section(result),
        "min_terms": rep.min_terms_section(result),
        "minimality": rep.minimality_section(result),
    }
    _emit(args, report, rep.minimality_table(report))
    return EXIT_OK if result.minimal else EXIT_NOT_MINIMAL


def cmd_solve(args) -> int:
    econ, policy = _load(args.file, args.normalize)
    result = _solve(econ)
    verification = None
    if args.verify_trials:
        verification = verify_equilibrium_sampled(result, econ, args.verify_trials, args.seed)
    report = rep.result_report(result, policy, verification)
    table = rep.result_table(report)
    _emit(args, report, table)
    if not result.minimal:
        print(f"warning: {result.label}", file=sys.stderr)
        return EXIT_NOT_MINIMAL
    if verification is not None and not verification.ok:
        print("warning: sampled verification found a violation", file=sys.stderr)
        return EXIT_PRICE
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        spec = GenSpec(args.m, args.n, args.seed, args.denominator_bound, args.minimal)
    except ValueError as exc:
        raise _Failure(EXIT_GENERATION, str(exc)) from None
    try:
        econ = generate_economy(spec)
    except GenerationFailed as exc:
        raise _Failure(EXIT_GENERATION, str(exc)) from None
    sys.stdout.write(dump_economy(econ))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplex-economy",
        description="Exact competitive equilibria of minimal simplex economies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def economy_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="economy file (.json or .csv)")
        p.add_argument(
            "--normalize", action="store_true",
            help="rescale columns that do not sum to 1 instead of rejecting them",
        )
        p.add_argument("--format", choices=("table", "machine"), default="table")
        p.set_defaults(func=func)
        return p

    economy_command("validate", cmd_validate, "check that W and sigma form a simplex economy")
    economy_command("check-minimal", cmd_check_minimal, "test minimality")
    solve = economy_command("solve", cmd_solve, "compute F* and p*")
    solve.add_argument("--verify-trials", type=int, default=0, metavar="N",
                       help="sample N dominating allocations and check they are unaffordable")
    solve.add_argument("--seed", type=int, default=0)

    gen = sub.add_parser("generate", help="print a random economy file")
    gen.add_argument("-m", type=int, required=True, help="number of consumers")
    gen.add_argument("-n", type=int, required=True, help="number of commodities")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--denominator-bound", type=int, default=12)
    gen.add_argument("--minimal", action="store_true", help="force a minimal economy")
    gen.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
