from typing import Optional, Sequence

from pydantic import BaseModel
from rich.console import Console, Group
from rich.panel import Panel
from rich.table import Table

from pyroi.io.emit import PERCENT_FIELDS
from pyroi.propagation.report import ErrorReport
from pyroi.simulation.models import AnalyticComparison, SimulationResult


def summary(
    obj: BaseModel | Sequence[BaseModel],
    console: Optional[Console] = None,
    percent: bool = False,
) -> None:
    """
    Print a rich terminal summary of a result.

    Args:
        obj: ErrorReport, SimulationResult, AnalyticComparison or a list of rows
        console: Rich console instance (creates new one if None)
        percent: Whether to display fractions as percentages
    """
    if console is None:
        console = Console()

    if isinstance(obj, ErrorReport):
        console.print(_error_report_content(obj, percent))
    elif isinstance(obj, SimulationResult):
        console.print(_simulation_content(obj, percent))
    elif isinstance(obj, AnalyticComparison):
        console.print(_comparison_table(obj, percent))
    else:
        console.print(_rows_table(list(obj), percent))


def _fmt(value: Optional[float], percent: bool) -> str:
    """Format a fraction for display."""
    if value is None:
        return "undefined"
    if percent:
        return f"{value * 100:.4f} %"
    return f"{value:.6g}"


def _error_report_content(report: ErrorReport, percent: bool) -> Group:
    """Create the overview panel and measures table of an error report."""
    overview = [
        f"[bold]Benefit:[/bold] {report.benefit_total.value:g} ± {report.benefit_total.abs_error:g}",
        f"[bold]Cost:[/bold] {report.cost_total.value:g} ± {report.cost_total.abs_error:g}",
        f"[bold]Aggregation:[/bold] {report.aggregation_mode.value}",
    ]
    if report.exceeds_taylor_threshold:
        overview.append(
            "[bold yellow]Relative errors exceed 20%, approximations may "
            "underestimate the exact bounds[/bold yellow]"
        )

    panel = Panel(
        "\n".join(overview),
        title="📄 ROI Error Report",
        title_align="left",
        border_style="blue",
    )

    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Measure", no_wrap=True)
    table.add_column("Value", justify="right")

    measures = [
        ("ROI", report.roi),
        ("Maximum probable error", report.max_probable_error),
        ("Probable error", report.probable_error),
        ("Exact lower bound", report.roi_lower),
        ("Exact upper bound", report.roi_upper),
        ("Relative maximum error", report.relative_max_error),
        ("Quotient relative error", report.quotient_relative_error),
    ]
    for name, value in measures:
        table.add_row(name, _fmt(value, percent))

    return Group(panel, table)


def _simulation_content(result: SimulationResult, percent: bool) -> Group:
    """Create the case panel and statistics table of a simulation."""
    case = result.case
    band = case.band.value if case.band else "explicit"
    panel = Panel(
        "\n".join(
            [
                f"[bold]Case:[/bold] C = {case.cost_act:g} ({band}), B = {case.benefit_act:g}",
                f"[bold]Iterations:[/bold] {result.iterations}",
                f"[bold]Seed:[/bold] {result.seed}",
            ]
        ),
        title="🎲 Monte Carlo Simulation",
        title_align="left",
        border_style="blue",
    )

    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Statistic", no_wrap=True)
    table.add_column("Value", justify="right")

    stats = result.draw_stats
    for name, value in [
        ("Actual ROI", result.actual_roi),
        ("Mean absolute error", result.mean_abs_error),
        ("Mean estimated ROI", stats.mean),
        ("Std estimated ROI", stats.std),
        ("5th percentile", stats.p5),
        ("Median", stats.p50),
        ("95th percentile", stats.p95),
        ("Minimum", stats.min),
        ("Maximum", stats.max),
    ]:
        table.add_row(name, _fmt(value, percent))

    table.add_row("Within exact bounds", "✓" if result.containment else "✗")

    return Group(panel, table)


def _comparison_table(comparison: AnalyticComparison, percent: bool) -> Table:
    """Create a table comparing analytic and simulated errors."""
    table = Table(
        title="📊 Analytic vs. Monte Carlo",
        show_header=True,
        header_style="bold magenta",
    )
    table.add_column("Measure", no_wrap=True)
    table.add_column("Value", justify="right")

    for name, value in [
        ("Maximum probable error", comparison.max_probable_error),
        ("Probable error", comparison.probable_error),
        ("Exact lower bound", comparison.roi_lower),
        ("Exact upper bound", comparison.roi_upper),
        ("MC mean absolute error", comparison.mc_mean_abs_error),
    ]:
        table.add_row(name, _fmt(value, percent))

    table.add_row("Draws within bounds", "✓" if comparison.containment else "✗")
    table.add_row("Probable <= maximum", "✓" if comparison.ordering else "✗")

    return table


def _rows_table(rows: list[BaseModel], percent: bool) -> Table:
    """Create a plain table from a list of row models."""
    table = Table(show_header=True, header_style="bold magenta")
    if not rows:
        return table

    for column in type(rows[0]).model_fields:
        table.add_column(column, justify="right")
    for row in rows:
        values = row.model_dump(mode="json")
        table.add_row(*[_cell(k, v, percent) for k, v in values.items()])

    return table


def _cell(field: str, value, percent: bool) -> str:
    if percent and field in PERCENT_FIELDS and isinstance(value, float):
        return _fmt(value, percent)
    return str(value)
