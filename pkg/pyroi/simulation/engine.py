"""
Monte Carlo estimation of the ROI error.

A run builds one project case (actual cost, actual benefit and actual ROI),
then samples N benefit and cost estimates uniformly within the given
relative error bounds and averages the absolute deviation of the estimated
ROIs from the actual one.

Sampling happens in relative space: with deviates u, v uniform on [-1, 1),

    beta = B * (1 + u * e_benefit)
    zeta = C * (1 + v * e_cost)
    R_est = (B / C) * (1 + u * e_benefit) / (1 + v * e_cost) - 1

which equals (beta - zeta) / zeta but does not depend on the size of the
project. Runs that differ only in project size are therefore bit-identical
in every ROI they produce.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional, Union

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from pyroi.core.exceptions import DomainError
from pyroi.core.models import Estimate, Scenario
from pyroi.propagation.aggregation import AggregationMode, aggregate
from pyroi.propagation.analytic import exact_worst_case_bounds
from pyroi.simulation.bands import ProjectBand
from pyroi.simulation.models import (
    E_COST_CAP,
    CaseRecord,
    DrawRecord,
    DrawStatistics,
    SimulationConfig,
    SimulationResult,
)
from pyroi.simulation.streams import Substreams

# Slack for comparing relative-space draws against the money-space bounds
CONTAINMENT_TOLERANCE = 1e-12


def build_case(
    source: Union[ProjectBand, float],
    ratio: float,
    streams: Substreams,
) -> CaseRecord:
    """Builds the actual project case of a simulation.

    The actual cost is drawn uniformly from the band (or taken verbatim if an
    explicit cost is given), the actual benefit is cost * ratio and the actual
    ROI is ratio - 1.

    Args:
        source (ProjectBand | float): Band to draw from, or explicit cost.
        ratio (float): Benefit-cost ratio, strictly positive.
        streams (Substreams): Random substreams of the run.

    Returns:
        CaseRecord: The actual case.

    Raises:
        DomainError: If the ratio or the explicit cost is not positive.
    """

    if not (ratio > 0 and math.isfinite(ratio)):
        raise DomainError(f"benefit-cost ratio must be positive, got {ratio!r}")

    band = None
    if isinstance(source, ProjectBand):
        deviates = streams.case_deviates()
        band = source
        if band is ProjectBand.ANY:
            concrete = ProjectBand.concrete()
            band = concrete[min(int(deviates[0] * len(concrete)), len(concrete) - 1)]

        low, high = band.cost_range
        cost = low + deviates[1] * (high - low)
    else:
        cost = float(source)
        if not (cost > 0 and math.isfinite(cost)):
            raise DomainError(f"actual cost must be positive, got {source!r}")

    return CaseRecord(
        cost_act=cost,
        benefit_act=cost * ratio,
        roi_act=ratio - 1,
        benefit_cost_ratio=ratio,
        band=band,
    )


def sample_draw(
    benefit_act: float,
    cost_act: float,
    e_benefit: float,
    e_cost: float,
    streams: Substreams,
    index: int,
) -> DrawRecord:
    """Samples the benefit and cost estimates of a single iteration.

    The benefit is uniform on [B(1 - e_b), B(1 + e_b)] and the cost uniform
    on [C(1 - e_c), C(1 + e_c)], both drawn independently from the substream
    of iteration ``index``.

    Raises:
        DomainError: If e_cost is not below the cap or the cost not positive.
    """

    _check_errors(e_benefit, e_cost)
    if not cost_act > 0:
        raise DomainError(f"actual cost must be positive, got {cost_act!r}")

    u, v = streams.relative_deviates(index, index + 1)
    ratio = benefit_act / cost_act
    roi_est = _roi_estimates(ratio, e_benefit, e_cost, u, v)

    return DrawRecord(
        index=index,
        beta=benefit_act * (1 + float(u[0]) * e_benefit),
        zeta=cost_act * (1 + float(v[0]) * e_cost),
        roi_est=float(roi_est[0]),
    )


def draw_estimates(
    case: CaseRecord,
    e_benefit: float,
    e_cost: float,
    streams: Substreams,
    start: int,
    stop: int,
) -> np.ndarray:
    """Estimated ROIs of iterations start, ..., stop - 1 as an array."""
    u, v = streams.relative_deviates(start, stop)
    return _roi_estimates(case.benefit_cost_ratio, e_benefit, e_cost, u, v)


def run_simulation(config: SimulationConfig) -> SimulationResult:
    """Runs a Monte Carlo estimation of the mean absolute ROI error.

    The result is fully determined by the configuration. Neither the number
    of workers nor the chunk size changes a single bit of it, as every
    iteration reads its own substream and the reduction runs in index order
    with exact summation.

    Args:
        config (SimulationConfig): Run controls.

    Returns:
        SimulationResult: Actual ROI, mean absolute error and draw statistics.

    Raises:
        DomainError: If the case cannot be built or the error bounds are invalid.

    Example:
        >>> config = SimulationConfig(case_source=100.0, e_benefit=0.05, e_cost=0.05)
        >>> result = run_simulation(config)
        >>> round(result.mean_abs_error, 2)
        0.07
    """

    _check_errors(config.e_benefit, config.e_cost)

    streams = Substreams(config.seed)
    case = build_case(config.case_source, config.benefit_cost_ratio, streams)

    logger.debug(
        f"Simulating {config.iterations} iterations (seed {config.seed}, "
        f"chunks of {config.chunk_size}, n_jobs {config.n_jobs}) for "
        f"C = {case.cost_act!r}, ratio {case.benefit_cost_ratio!r}"
    )

    roi_est = _evaluate_chunks(case, config, streams)
    abs_errors = np.abs(case.roi_act - roi_est)

    lower, upper = exact_worst_case_bounds(
        Estimate(value=case.benefit_act, abs_error=case.benefit_act * config.e_benefit),
        Estimate(value=case.cost_act, abs_error=case.cost_act * config.e_cost),
    )

    stats = _draw_statistics(roi_est)
    result = SimulationResult(
        actual_roi=case.roi_act,
        mean_abs_error=math.fsum(abs_errors.tolist()) / config.iterations,
        draw_stats=stats,
        iterations=config.iterations,
        seed=config.seed,
        case=case,
        roi_lower=lower,
        roi_upper=upper,
        containment=_within(stats.min, stats.max, lower, upper),
        config=config,
    )

    logger.info(
        f"δR = {result.mean_abs_error:.6g} after {config.iterations} iterations "
        f"(e_b {config.e_benefit}, e_c {config.e_cost}, seed {config.seed})"
    )

    return result


def iter_draws(config: SimulationConfig) -> Iterator[DrawRecord]:
    """Yields the individual draws of a run, in iteration order."""

    _check_errors(config.e_benefit, config.e_cost)

    streams = Substreams(config.seed)
    case = build_case(config.case_source, config.benefit_cost_ratio, streams)

    for start in range(0, config.iterations, config.chunk_size):
        stop = min(start + config.chunk_size, config.iterations)
        u, v = streams.relative_deviates(start, stop)
        roi_est = _roi_estimates(case.benefit_cost_ratio, config.e_benefit, config.e_cost, u, v)
        beta = case.benefit_act * (1 + u * config.e_benefit)
        zeta = case.cost_act * (1 + v * config.e_cost)

        for k in range(stop - start):
            yield DrawRecord(
                index=start + k,
                beta=float(beta[k]),
                zeta=float(zeta[k]),
                roi_est=float(roi_est[k]),
            )


def _evaluate_chunks(
    case: CaseRecord,
    config: SimulationConfig,
    streams: Substreams,
) -> np.ndarray:
    bounds = [
        (start, min(start + config.chunk_size, config.iterations))
        for start in range(0, config.iterations, config.chunk_size)
    ]

    if config.n_jobs == 1 or len(bounds) == 1:
        parts = [
            draw_estimates(case, config.e_benefit, config.e_cost, streams, start, stop)
            for start, stop in bounds
        ]
    else:
        parts = Parallel(n_jobs=config.n_jobs, prefer="threads")(
            delayed(draw_estimates)(
                case, config.e_benefit, config.e_cost, streams, start, stop
            )
            for start, stop in bounds
        )

    return np.concatenate(parts)  # type: ignore


def _roi_estimates(
    ratio: float,
    e_benefit: float,
    e_cost: float,
    u: np.ndarray,
    v: np.ndarray,
) -> np.ndarray:
    return ratio * ((1.0 + u * e_benefit) / (1.0 + v * e_cost)) - 1.0


def _draw_statistics(roi_est: np.ndarray) -> DrawStatistics:
    p5, p50, p95 = np.percentile(roi_est, [5, 50, 95])
    return DrawStatistics(
        mean=math.fsum(roi_est.tolist()) / len(roi_est),
        std=float(np.std(roi_est)),
        min=float(roi_est.min()),
        max=float(roi_est.max()),
        p5=float(p5),
        p50=float(p50),
        p95=float(p95),
    )


def _within(low: float, high: float, lower: float, upper: float) -> bool:
    slack_low = CONTAINMENT_TOLERANCE * max(1.0, abs(lower))
    slack_high = CONTAINMENT_TOLERANCE * max(1.0, abs(upper))
    return lower - slack_low <= low and high <= upper + slack_high


def _check_errors(e_benefit: float, e_cost: float) -> None:
    if not 0 <= e_benefit <= 1:
        raise DomainError(f"benefit error must lie in [0, 1], got {e_benefit!r}")
    if not e_cost >= 0:
        raise DomainError(f"cost error must be non-negative, got {e_cost!r}")
    if e_cost >= E_COST_CAP:
        raise DomainError(
            f"cost error >= 100%: e_cost {e_cost!r} would allow non-positive "
            f"sampled costs (cap {E_COST_CAP})"
        )


def config_from_scenario(
    scenario: Scenario,
    e_benefit: Optional[float] = None,
    e_cost: Optional[float] = None,
    mode: AggregationMode = AggregationMode.SUM,
    **overrides,
) -> SimulationConfig:
    """Simulation settings for the aggregate benefit and cost of a scenario.

    The Monte Carlo engine works on totals only. The total cost becomes the
    explicit actual cost and the benefit-cost ratio is taken from the totals.
    Relative errors default to those of the aggregated totals.

    Args:
        scenario (Scenario): The itemized scenario.
        e_benefit (float, optional): Benefit error, defaults to the aggregate.
        e_cost (float, optional): Cost error, defaults to the aggregate.
        mode (AggregationMode): Aggregation of the component errors.
        **overrides: Further SimulationConfig fields.

    Returns:
        SimulationConfig: The configuration of the run.
    """

    benefit = aggregate(scenario.benefit_estimates(), mode)
    cost = aggregate(scenario.cost_estimates(), mode)

    if benefit.value <= 0:
        raise DomainError(
            f"scenario '{scenario.name}' has no positive total benefit to simulate"
        )

    return SimulationConfig(
        case_source=cost.value,
        benefit_cost_ratio=benefit.value / cost.value,
        e_benefit=benefit.relative_error if e_benefit is None else e_benefit,
        e_cost=cost.relative_error if e_cost is None else e_cost,
        **overrides,
    )
