from __future__ import annotations

import math
from enum import Enum
from typing import Optional, Union

from loguru import logger

from pyroi.core.exceptions import DomainError
from pyroi.simulation.bands import ProjectBand
from pyroi.simulation.engine import run_simulation
from pyroi.simulation.models import (
    DEFAULT_ITERATIONS,
    DEFAULT_RATIO,
    DEFAULT_SEED,
    E_COST_CAP,
    SimulationConfig,
    SweepRow,
)


class SweepRange(Enum):
    """
    Predefined relative error ranges of a sweep.

    LOW covers 0 to 45%, where the ROI error grows almost linearly. HIGH
    covers 40% to 95%, where it grows much faster. CUSTOM takes explicit
    start and stop values.
    """

    LOW = "low"
    HIGH = "high"
    CUSTOM = "custom"


RANGE_LIMITS: dict[SweepRange, tuple[float, float]] = {
    SweepRange.LOW: (0.0, 0.45),
    SweepRange.HIGH: (0.40, 0.95),
}


def sweep_grid(
    sweep_range: SweepRange,
    step: float,
    start: Optional[float] = None,
    stop: Optional[float] = None,
) -> list[float]:
    """Relative error grid start, start + step, ... <= stop.

    Grid points are rounded to 12 decimals so that e.g. 0.1 + 0.2 lands on
    0.3 and rows print cleanly.

    Raises:
        DomainError: If the step is not positive, the bounds are missing or
            inverted, or the grid reaches the cost error cap.
    """

    if not step > 0:
        raise DomainError(f"sweep step must be positive, got {step!r}")

    if sweep_range is SweepRange.CUSTOM:
        if start is None or stop is None:
            raise DomainError("custom sweep range requires start and stop")
        low, high = start, stop
    else:
        low, high = RANGE_LIMITS[sweep_range]

    if low < 0 or high < low:
        raise DomainError(f"invalid sweep range [{low!r}, {high!r}]")
    if high >= E_COST_CAP:
        raise DomainError(
            f"sweep would require a cost error >= {E_COST_CAP} (stop {high!r}); "
            "cost errors must stay below 100%"
        )

    count = math.floor((high - low) / step + 1e-9)
    return [round(low + k * step, 12) for k in range(count + 1)]


def run_sweep(
    sweep_range: SweepRange = SweepRange.LOW,
    step: float = 0.05,
    ratio: float = DEFAULT_RATIO,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = DEFAULT_SEED,
    start: Optional[float] = None,
    stop: Optional[float] = None,
    case_source: Union[ProjectBand, float] = ProjectBand.SMALL,
    n_jobs: int = 1,
) -> list[SweepRow]:
    """Mean absolute ROI error over a grid of equal benefit and cost errors.

    Every grid point reuses the same seed, so all points share the same case
    and the same deviates (u_i, v_i) per iteration (common random numbers).
    Differences between grid points are then caused by the error level alone,
    which makes the curve smooth and monotone.

    Args:
        sweep_range (SweepRange): LOW (0-45%), HIGH (40-95%) or CUSTOM.
        step (float): Grid spacing.
        ratio (float): Benefit-cost ratio of the case.
        iterations (int): Iterations per grid point.
        seed (int): Seed shared by all grid points.
        start (float, optional): First grid point of a CUSTOM range.
        stop (float, optional): Last grid point of a CUSTOM range.
        case_source (ProjectBand | float): Band or explicit actual cost.
        n_jobs (int): Parallel workers per grid point.

    Returns:
        list[SweepRow]: One row per grid point, ordered by e.
    """

    grid = sweep_grid(sweep_range, step, start, stop)
    logger.info(
        f"Sweeping {len(grid)} error levels from {grid[0]} to {grid[-1]} "
        f"(ratio {ratio}, N = {iterations}, seed {seed})"
    )

    rows = []
    for e in grid:
        config = SimulationConfig(
            iterations=iterations,
            seed=seed,
            case_source=case_source,
            benefit_cost_ratio=ratio,
            e_benefit=e,
            e_cost=e,
            n_jobs=n_jobs,
        )
        result = run_simulation(config)
        rows.append(
            SweepRow(
                e=e,
                delta_r=result.mean_abs_error,
                ratio=ratio,
                iterations=iterations,
                seed=seed,
            )
        )

    return rows
