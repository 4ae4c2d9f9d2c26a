"""
cyclohodge command line interface.

Usage e.g.::

    cyclohodge dims --n 5 --q 7
    cyclohodge verify-lemma --q-max 64 --jobs 4
    cyclohodge scan --n-max 40 --q-max 128 --format csv --out scan.csv

The report goes to standard output (or --out); progress and diagnostics
go to standard error. Exit code 0 = pass, 1 = violation, 2 = usage error.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

import sys
from argparse import SUPPRESS, ArgumentDefaultsHelpFormatter, ArgumentParser
from functools import partial
from logging import CRITICAL, DEBUG, ERROR, INFO, Formatter, StreamHandler, getLogger

from cyclohodge._version import __version__ as VERSION
from cyclohodge.criteria import condition_row, scan_condition_implication, tally_conditions
from cyclohodge.exceptions import (
    BadPair,
    DomainTooLarge,
    HodgeInvariantError,
    ParameterError,
    PreconditionViolated,
    ReportError,
)
from cyclohodge.galoisorbits import full_scan, orbit_cover_rows, scan_row, verify_orbit_cover
from cyclohodge.hodgedata import dimension_row, profile_row, verify_dimensions, verify_profiles
from cyclohodge.hodgereport import VerificationReport, emit_csv, emit_json, write_csv
from cyclohodge.hodgetypes_core import (
    CMD_CHECK,
    CMD_DIMS,
    CMD_ORACLE,
    CMD_ORBITS,
    CMD_PROFILES,
    CMD_SCAN,
    CMD_STEPS,
    CMD_VERIFY_LEMMA,
    ERR_RAISE,
    EXIT_PASS,
    EXIT_USAGE,
    EXIT_VIOLATION,
    STATUS_FAIL,
)
from cyclohodge.lemmaengine import (
    certificate_row,
    lemma_rows,
    oracle_rows,
    step_row,
    verify_lemma_exhaustive,
    verify_oracle_equivalence,
    verify_step_structure,
)

VERBOSITY = {0: CRITICAL, 1: ERROR, 2: INFO, 3: DEBUG}
"""--verbosity to logging level"""

USAGE_ERRORS = (BadPair, DomainTooLarge, ParameterError, PreconditionViolated, ReportError)
"""Exceptions reported as usage / input errors (exit 2)"""

_handler = None


def _set_logging(verbosity: int):
    """
    Route the package log to standard error at the requested verbosity.
    """

    global _handler  # pylint: disable=global-statement

    pkglog = getLogger("cyclohodge")
    if _handler is not None:
        pkglog.removeHandler(_handler)
    _handler = StreamHandler(sys.stderr)
    _handler.setFormatter(Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    pkglog.addHandler(_handler)
    pkglog.setLevel(VERBOSITY.get(verbosity, ERROR))


def _build_parser() -> ArgumentParser:
    """
    Argument parser with one subcommand per verification.
    """

    common = ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv"), default="json", help="Report format"
    )
    common.add_argument("--out", default=None, help="Output file (default stdout)")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes")
    common.add_argument(
        "--verbosity",
        type=int,
        choices=(0, 1, 2, 3),
        default=1,
        help="Log level 0 = critical, 1 = error, 2 = info (progress), 3 = debug",
    )
    common.add_argument(
        "--no-timing",
        action="store_true",
        help="Omit wall_time so JSON is byte-identical across runs",
    )
    common.add_argument("--inject-violation", action="store_true", help=SUPPRESS)

    grid = ArgumentParser(add_help=False)
    grid.add_argument("--n", type=int, default=None, help="Degree n (single cell)")
    grid.add_argument("--q", type=int, default=None, help="Modulus q (single cell)")
    grid.add_argument("--n-max", type=int, default=None, help="Largest degree in grid")
    grid.add_argument("--q-max", type=int, default=None, help="Largest modulus in grid")
    grid.add_argument(
        "--include-n-greater-q",
        action="store_true",
        help="Include cells with n > q",
    )

    qgrid = ArgumentParser(add_help=False)
    qgrid.add_argument("--q", type=int, default=None, help="Modulus q (single)")
    qgrid.add_argument("--q-max", type=int, default=None, help="Largest modulus")

    parser = ArgumentParser(
        prog="cyclohodge",
        description="Verification toolkit for Hodge data of cyclic covers y^q = f(x)",
        formatter_class=ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + VERSION)
    sub = parser.add_subparsers(dest="command", required=True)
    kws = {"formatter_class": ArgumentDefaultsHelpFormatter}
    sub.add_parser(CMD_DIMS, parents=[common, grid], help="Dimension formulas", **kws)
    sub.add_parser(CMD_CHECK, parents=[common, grid], help="Conditions (A)(B)(C)", **kws)
    lemma = sub.add_parser(
        CMD_VERIFY_LEMMA, parents=[common, qgrid], help="Even-function lemma", **kws
    )
    lemma.add_argument("--a", type=int, default=None, help="Unit a (with --q)")
    sub.add_parser(CMD_SCAN, parents=[common, grid], help="Full grid scan", **kws)
    sub.add_parser(CMD_ORBITS, parents=[common, grid], help="Good-pair orbit cover", **kws)
    sub.add_parser(CMD_PROFILES, parents=[common, grid], help="Hodge profiles", **kws)
    sub.add_parser(CMD_STEPS, parents=[common, qgrid], help="Proof-case structure", **kws)
    sub.add_parser(
        CMD_ORACLE, parents=[common, qgrid], help="Closure against threshold oracle", **kws
    )
    return parser


def _single(command: str, invocation: dict, rows: list) -> VerificationReport:
    """
    Report from rows computed in-process for explicitly requested cells.
    """

    report = VerificationReport(command, invocation)
    for cell, result in rows:
        report.add(cell, result)
    return report


def _nq_report(args, rowfunc, gridfunc) -> VerificationReport:
    """
    Dispatch an (n, q) command to a single cell or a grid scan.
    """

    if args.n is not None or args.q is not None:
        if args.n is None or args.q is None:
            raise ParameterError("--n and --q must be given together")
        cell = (args.n, args.q)
        return _single(args.command, {"n": args.n, "q": args.q}, rowfunc(cell))
    if args.n_max is None or args.q_max is None:
        raise ParameterError("Either --n and --q, or --n-max and --q-max, are required")
    return gridfunc(
        args.n_max,
        args.q_max,
        args.include_n_greater_q,
        jobs=args.jobs,
        quitonerror=ERR_RAISE,
    )


def _q_report(args, rowfunc, gridfunc) -> VerificationReport:
    """
    Dispatch a q command to a single modulus or all prime powers <= q_max.
    """

    if args.q is not None:
        return _single(args.command, {"q": args.q}, rowfunc(args.q))
    if args.q_max is None:
        raise ParameterError("Either --q or --q-max is required")
    return gridfunc(args.q_max, jobs=args.jobs, quitonerror=ERR_RAISE)


def _make_report(args) -> VerificationReport:
    """
    Run the requested verification.
    """

    cmd = args.command
    if args.jobs < 1:
        raise ParameterError(f"--jobs must be >= 1, got {args.jobs}")
    if cmd == CMD_DIMS:
        return _nq_report(args, dimension_row, verify_dimensions)
    if cmd == CMD_CHECK:
        report = _nq_report(
            args,
            condition_row,
            lambda n_max, q_max, _, **kw: scan_condition_implication(n_max, q_max, **kw),
        )
        if args.n is not None:
            tally_conditions(report)
        return report
    if cmd == CMD_SCAN:
        report = _nq_report(args, scan_row, full_scan)
        if args.n is not None:
            tally_conditions(report)
        return report
    if cmd == CMD_ORBITS:
        return _nq_report(args, orbit_cover_rows, verify_orbit_cover)
    if cmd == CMD_PROFILES:
        # fault injection corrupts the tables themselves
        perturb = args.inject_violation
        return _nq_report(
            args,
            partial(profile_row, perturb=perturb),
            partial(verify_profiles, perturb=perturb),
        )
    if cmd == CMD_VERIFY_LEMMA:
        if args.a is not None:
            if args.q is None:
                raise ParameterError("--a requires --q")
            return _single(cmd, {"q": args.q, "a": args.a}, certificate_row(args.q, args.a))
        return _q_report(args, lemma_rows, verify_lemma_exhaustive)
    if cmd == CMD_STEPS:
        return _q_report(args, step_row, verify_step_structure)
    return _q_report(args, oracle_rows, verify_oracle_equivalence)


def _emit(report: VerificationReport, args):
    """
    Write the report in the requested format to --out or stdout.
    """

    timing = not args.no_timing
    if args.out is not None:
        if args.format == "csv":
            emit_csv(report, args.out)
        else:
            emit_json(report, args.out, timing)
    elif args.format == "csv":
        write_csv(report, sys.stdout)
    else:
        sys.stdout.write(report.serialize(timing))


def run_cli(argv=None) -> int:
    """
    Parse arguments, run the verification and emit the report.

    :param list argv: argument list, excluding program name (sys.argv[1:])
    :return: exit code 0 (pass), 1 (violation) or 2 (usage error)
    :rtype: int
    """

    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as err:  # argparse usage error, --help or --version
        return EXIT_PASS if err.code in (0, None) else EXIT_USAGE

    _set_logging(args.verbosity)
    logger = getLogger(__name__)
    logger.info("Running %s", args.command)
    try:
        report = _make_report(args)  # rows already in grid order
        if args.inject_violation and report.overall_status != STATUS_FAIL:
            report.inject_violation()
        _emit(report, args)
    except HodgeInvariantError as err:
        logger.critical("Table invariant violated: %s", err)
        print(f"cyclohodge: violation: {err}", file=sys.stderr)
        return EXIT_VIOLATION
    except USAGE_ERRORS as err:
        print(f"cyclohodge: error: {err}", file=sys.stderr)
        return EXIT_USAGE

    logger.info("%s", report)
    if report.overall_status == STATUS_FAIL:
        return EXIT_VIOLATION
    return EXIT_PASS


def main():
    """
    CLI entry point.
    """

    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":

    main()
