"""
Command-line interface of pyroi.

Subcommands:

    analyze FILE        analytic error report of a scenario document
    simulate            Monte Carlo run plus analytic comparison
    sweep               ROI error over a grid of equal relative errors
    validity            gap between 1 / (1 - x) and 1 + x
    convergence         spread of the simulated error across seeds

Numeric results go to standard output, diagnostics to standard error. Exit
codes: 0 on success, 1 for computation or domain errors, 2 for usage and
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from loguru import logger
from pydantic import BaseModel, ValidationError
from rich.console import Console

from pyroi import __version__
from pyroi.core.exceptions import DomainError, ScenarioParseError
from pyroi.io.emit import emit
from pyroi.io.scenario import read_scenario
from pyroi.logging import add_logger, verbosity_level
from pyroi.pretty import summary
from pyroi.propagation.aggregation import AggregationMode
from pyroi.propagation.report import scenario_error_report
from pyroi.propagation.validity import ValidityRow, taylor_validity_table
from pyroi.simulation.bands import ProjectBand
from pyroi.simulation.compare import compare_with_analytic
from pyroi.simulation.convergence import (
    DEFAULT_N_LIST,
    DEFAULT_SEED_COUNT,
    convergence_study,
)
from pyroi.simulation.engine import config_from_scenario, iter_draws, run_simulation
from pyroi.simulation.models import (
    DEFAULT_ITERATIONS,
    DEFAULT_RATIO,
    DEFAULT_SEED,
    ConvergenceRow,
    DrawRecord,
    SimulationConfig,
    SweepRow,
)
from pyroi.simulation.sweep import SweepRange, run_sweep

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

FORMATS = ["csv", "json", "table"]


class UsageError(Exception):
    """Raised for argument combinations argparse cannot express"""


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs the command line and returns the exit code."""

    parser = _build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    add_logger("pyroi", sys.stderr, level=verbosity_level(args.verbose))

    try:
        return args.handler(args)
    except (FileNotFoundError, ScenarioParseError, UsageError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except DomainError as e:
        logger.error(str(e))
        return EXIT_DOMAIN
    except ValidationError as e:
        logger.error(_validation_message(e))
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


def _analyze(args: argparse.Namespace) -> int:
    scenario = read_scenario(args.file)
    report = scenario_error_report(scenario, AggregationMode(args.mode))
    _write(report, args)
    return EXIT_OK


def _simulate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)

    if args.draws:
        draws = list(iter_draws(config))
        _write(draws, args, row_type=DrawRecord)
        return EXIT_OK

    result = run_simulation(config)
    comparison = compare_with_analytic(result)

    if args.format == "table":
        console = Console(file=sys.stdout)
        summary(result, console=console, percent=args.percent)
        summary(comparison, console=console, percent=args.percent)
    else:
        sys.stdout.write(
            emit(
                {"simulation": result, "comparison": comparison},
                args.format,
                percent=args.percent,
            )
        )

    return EXIT_OK


def _sweep(args: argparse.Namespace) -> int:
    sweep_range, start, stop = _parse_range(args.range)
    rows = run_sweep(
        sweep_range=sweep_range,
        step=args.step,
        ratio=args.ratio,
        iterations=args.iterations,
        seed=args.seed,
        start=start,
        stop=stop,
        n_jobs=args.n_jobs,
    )
    _write(rows, args, row_type=SweepRow)
    return EXIT_OK


def _validity(args: argparse.Namespace) -> int:
    rows = taylor_validity_table(args.max, args.step)
    _write(rows, args, row_type=ValidityRow)
    return EXIT_OK


def _convergence(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    n_list = _parse_int_list(args.n_list)
    rows = convergence_study(config, n_list, args.seeds)
    _write(rows, args, row_type=ConvergenceRow)
    return EXIT_OK


def _write(
    result: BaseModel | list,
    args: argparse.Namespace,
    row_type: Optional[type[BaseModel]] = None,
) -> None:
    if args.format == "table":
        summary(result, console=Console(file=sys.stdout), percent=args.percent)
        return

    sys.stdout.write(emit(result, args.format, row_type=row_type, percent=args.percent))


def _config_from_args(args: argparse.Namespace) -> SimulationConfig:
    """Builds the simulation config from a scenario file or case flags."""

    controls = dict(iterations=args.iterations, seed=args.seed, n_jobs=args.n_jobs)

    if args.file is not None:
        if args.cost is not None or args.band is not None:
            raise UsageError("give either a scenario file or --cost/--band, not both")
        if args.ratio is not None:
            raise UsageError("--ratio is taken from the scenario file, do not pass both")
        scenario = read_scenario(args.file)
        return config_from_scenario(
            scenario,
            e_benefit=args.e_benefit,
            e_cost=args.e_cost,
            **controls,
        )

    if args.cost is not None and args.band is not None:
        raise UsageError("--cost and --band are mutually exclusive")
    if args.e_benefit is None or args.e_cost is None:
        raise UsageError("--e-benefit and --e-cost are required without a scenario file")

    source = ProjectBand(args.band) if args.band is not None else args.cost
    if source is None:
        source = ProjectBand.SMALL

    return SimulationConfig(
        case_source=source,
        benefit_cost_ratio=DEFAULT_RATIO if args.ratio is None else args.ratio,
        e_benefit=args.e_benefit,
        e_cost=args.e_cost,
        **controls,
    )


def _parse_range(values: list[str]) -> tuple[SweepRange, Optional[float], Optional[float]]:
    """Parses `low`, `high` or `custom A:B`"""

    try:
        sweep_range = SweepRange(values[0])
    except ValueError:
        raise UsageError(f"unknown sweep range '{values[0]}', use low, high or custom A:B")

    if sweep_range is not SweepRange.CUSTOM:
        if len(values) > 1:
            raise UsageError(f"range '{values[0]}' takes no bounds")
        return sweep_range, None, None

    if len(values) != 2 or values[1].count(":") != 1:
        raise UsageError("custom range requires bounds as A:B, e.g. --range custom 0:0.95")

    start, stop = values[1].split(":")
    try:
        return sweep_range, float(start), float(stop)
    except ValueError:
        raise UsageError(f"invalid custom range bounds '{values[1]}'")


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"invalid iteration list '{text}'")


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    field = ".".join(str(part) for part in first.get("loc", ()))
    return f"{field}: {first.get('msg', 'invalid value')}" if field else str(error)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyroi",
        description="Accuracy of ROI evaluations: analytic error propagation "
        "and Monte Carlo simulation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    def common(default_format: str = "csv") -> argparse.ArgumentParser:
        # Fresh parent per subcommand, argparse shares parent actions by reference
        parent = argparse.ArgumentParser(add_help=False)
        parent.add_argument("--format", choices=FORMATS, default=default_format)
        parent.add_argument(
            "--percent", action="store_true", help="display fractions as percentages"
        )
        parent.add_argument("-v", "--verbose", action="count", default=0)
        return parent

    runs = argparse.ArgumentParser(add_help=False)
    runs.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    runs.add_argument("--seed", type=int, default=DEFAULT_SEED)
    runs.add_argument(
        "--n-jobs", type=int, default=1, help="parallel workers, results are unaffected"
    )

    case = argparse.ArgumentParser(add_help=False)
    case.add_argument("file", nargs="?", default=None, help="scenario document (JSON)")
    case.add_argument("--cost", type=float, default=None, help="explicit actual cost")
    case.add_argument(
        "--band",
        choices=[b.value for b in ProjectBand],
        default=None,
        help="project band to draw the actual cost from",
    )
    case.add_argument(
        "--ratio", type=float, default=None, help=f"benefit-cost ratio (default {DEFAULT_RATIO})"
    )
    case.add_argument("--e-benefit", type=float, default=None)
    case.add_argument("--e-cost", type=float, default=None)

    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser(
        "analyze", parents=[common("json")], help="analytic error report of a scenario"
    )
    analyze.add_argument("file", help="scenario document (JSON)")
    analyze.add_argument(
        "--mode", choices=[m.value for m in AggregationMode], default="sum"
    )
    analyze.set_defaults(handler=_analyze)

    simulate = subparsers.add_parser(
        "simulate", parents=[common("json"), runs, case], help="Monte Carlo simulation"
    )
    simulate.add_argument(
        "--draws", action="store_true", help="output the individual draws instead"
    )
    simulate.set_defaults(handler=_simulate)

    sweep = subparsers.add_parser(
        "sweep", parents=[common(), runs], help="ROI error over relative error levels"
    )
    sweep.add_argument(
        "--range",
        nargs="+",
        default=["low"],
        metavar="RANGE",
        help="low, high or custom A:B",
    )
    sweep.add_argument("--step", type=float, default=0.05)
    sweep.add_argument("--ratio", type=float, default=DEFAULT_RATIO)
    sweep.set_defaults(handler=_sweep)

    validity = subparsers.add_parser(
        "validity", parents=[common()], help="Taylor approximation validity table"
    )
    validity.add_argument("--max", type=float, default=0.95)
    validity.add_argument("--step", type=float, default=0.05)
    validity.set_defaults(handler=_validity)

    convergence = subparsers.add_parser(
        "convergence", parents=[common(), runs, case], help="convergence study"
    )
    convergence.add_argument("--seeds", type=int, default=DEFAULT_SEED_COUNT)
    convergence.add_argument(
        "--n-list",
        default=",".join(str(n) for n in DEFAULT_N_LIST),
        help="comma separated iteration counts",
    )
    convergence.set_defaults(handler=_convergence)

    return parser
