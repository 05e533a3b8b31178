# MIT License

# Copyright (c) 2026 The qslope developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

r"""The ``qslope`` command line.

Exit codes: ``0`` success, ``1`` a verdict is false under ``verify --strict``,
``2`` usage or input error, ``3`` an engine cap was exceeded.
"""

from __future__ import annotations

from qslope.core.catalog import catalog_diagram, catalog_get, catalog_list
from qslope.core.config import EngineConfig
from qslope.core.pd import load_diagrams, parse_pd
from qslope.core.pipeline import analyze, characterize, compute_jones, fit_slopes, run_pipelines
from qslope.core.reports import render, render_catalog
from qslope.enums import Engine, OutputFormat, VerdictStatus
from qslope.exceptions import EngineCapExceeded, QslopeException
from qslope.models.catalog import Report
from qslope.project_info import __version__

import argparse
import logging
import sys
import time
import typing

if typing.TYPE_CHECKING:
    from qslope.models.catalog import KnotRecord
    from qslope.models.diagrams import Diagram

__all__ = (
    "EXIT_OK",
    "EXIT_VERDICT_FALSE",
    "EXIT_USAGE",
    "EXIT_CAP",
    "build_parser",
    "main",
)

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

COMMANDS = ("analyze", "jones", "adequacy", "slopes", "verify", "catalog")


class _UsageError(Exception):
    pass


def _add_input(parser: argparse.ArgumentParser, *, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--knot", action="append", metavar="LABEL", help="catalog knot or variant label, may be repeated")
    group.add_argument("--pd", metavar="STRING", help='PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"')
    group.add_argument("--file", metavar="PATH", help="JSON file with one diagram object or an array of them")

def _add_engine(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--engine", choices=Engine.ALL, default=Engine.AUTO, help="bracket engine (default: auto)")
    parser.add_argument("--statesum-cap", type=int, default=24, metavar="INT", help="largest crossing count for the state sum (default: 24)")
    parser.add_argument("--width-cap", type=int, default=16, metavar="INT", help="largest sweep width (default: 16)")

def _add_fit(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", "--nmax", type=int, default=3, metavar="INT", help="largest color (default: 3)")
    parser.add_argument("--period", type=int, default=1, metavar="INT", help="quasi-polynomial period (default: 1)")
    parser.add_argument("--fit-start", type=int, default=1, metavar="INT", help="smallest color used by the fit (default: 1)")

def build_parser() -> argparse.ArgumentParser:
    r"""Returns the argument parser of the command line."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OutputFormat.ALL, default=OutputFormat.TEXT, help="output format (default: text)")
    common.add_argument("--jobs", type=int, default=1, metavar="INT", help="worker processes (default: 1)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr, twice for debug output")

    parser = argparse.ArgumentParser(
        prog="qslope",
        description="Colored Jones degrees, Jones slopes and adequacy of knot diagrams.",
    )
    parser.add_argument("--version", action="version", version=f"qslope {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    sub = commands.add_parser("analyze", parents=[common], help="state summary and state surfaces of a diagram")
    _add_input(sub)

    sub = commands.add_parser("adequacy", parents=[common], help="adequacy and Turaev genus of a diagram")
    _add_input(sub)

    sub = commands.add_parser("jones", parents=[common], help="colored Jones polynomial J_K(n)")
    _add_input(sub)
    _add_engine(sub)
    sub.add_argument("-n", "--color", dest="nmax", type=int, default=2, metavar="N", help="the single color n to evaluate (default: 2)")

    sub = commands.add_parser("slopes", parents=[common], help="degree fit, Jones slopes and jx sets")
    _add_input(sub)
    _add_engine(sub)
    _add_fit(sub)

    sub = commands.add_parser("verify", parents=[common], help="degree bounds and every characterization verdict")
    _add_input(sub)
    _add_engine(sub)
    _add_fit(sub)
    sub.add_argument("--strict", action="store_true", help="exit with 1 if a verdict is false or a degree bound fails")

    sub = commands.add_parser("catalog", parents=[common], help="list the built-in knots, or show some with --knot")
    sub.add_argument("--knot", action="append", metavar="LABEL", help="show the diagrams of this knot")
    sub.add_argument("--variants", action="store_true", help="list variant labels too")

    return parser


def _diagrams(args: argparse.Namespace) -> typing.List[Diagram]:
    if args.knot:
        return [catalog_diagram(label) for label in args.knot]
    if args.pd is not None:
        return [parse_pd(args.pd, label="input")]
    return load_diagrams(args.file)

def _config(args: argparse.Namespace) -> EngineConfig:
    try:
        return EngineConfig(
            engine=args.engine,
            statesum_cap=args.statesum_cap,
            width_cap=args.width_cap,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None

def _strict_failures(records: typing.Iterable[KnotRecord]) -> typing.List[str]:
    failures = []
    for record in records:
        if record.bounds is not None and not record.bounds.bounds_hold:
            failures.append(f"{record.label}: degree bounds")
        if record.characterization is not None:
            for name, verdict in record.characterization.verdicts.items():
                if verdict.status == VerdictStatus.FALSE:
                    failures.append(f"{record.label}: {name}")
    return failures

def _run(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise _UsageError("--jobs must be at least 1")

    if args.command == "catalog":
        if args.knot:
            entries = []
            for label in args.knot:
                entry = catalog_get(label)
                if entry not in entries:
                    entries.append(entry)
            details = True
        else:
            entries = [catalog_get(label) for label in catalog_list()]
            details = args.variants
        sys.stdout.write(render_catalog(entries, args.format, details=details))
        return EXIT_OK

    diagrams = _diagrams(args)
    provenance: typing.Dict[str, typing.Any] = {"tool": "qslope", "version": __version__}
    started = time.perf_counter()

    if args.command in ("analyze", "adequacy"):
        records = run_pipelines(analyze, diagrams, jobs=args.jobs)
    else:
        config = _config(args)
        provenance.update(config.to_dict())
        if args.nmax < 1:
            raise _UsageError("the color -n must be at least 1")

        if args.command == "jones":
            provenance["n"] = args.nmax
            records = run_pipelines(compute_jones, diagrams, jobs=args.jobs, colors=[args.nmax], config=config)
        else:
            provenance.update(n_max=args.nmax, period=args.period, fit_start=args.fit_start)
            function = fit_slopes if args.command == "slopes" else characterize
            records = run_pipelines(
                function,
                diagrams,
                jobs=args.jobs,
                n_max=args.nmax,
                period=args.period,
                fit_start=args.fit_start,
                config=config,
            )

    report = Report(args.command, records, provenance, elapsed=time.perf_counter() - started)
    sys.stdout.write(render(report, args.format))

    if args.command == "verify" and args.strict:
        failures = _strict_failures(records)
        if failures:
            for failure in failures:
                print(f"qslope: false: {failure}", file=sys.stderr)
            return EXIT_VERDICT_FALSE
    return EXIT_OK

def main(argv: typing.Sequence[str] = None) -> int:
    r"""Runs the command line and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        return _run(args)
    except EngineCapExceeded as exc:
        print(f"qslope: {exc.cap_name} exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (QslopeException, _UsageError, ValueError, OSError) as exc:
        print(f"qslope: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
