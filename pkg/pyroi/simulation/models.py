from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, field_validator

from pyroi.core.models import Money, RoiValue
from pyroi.simulation.bands import ProjectBand

DEFAULT_ITERATIONS = 30000
DEFAULT_SEED = 20151001
DEFAULT_RATIO = 2.0
DEFAULT_CHUNK_SIZE = 10000

# Sampled costs must stay positive, so cost errors stop short of 100%
E_COST_CAP = 0.999


class SimulationConfig(BaseModel):
    """
    Controls of a single Monte Carlo run.

    The case is either drawn from a project band or built from an explicit
    actual cost. Benefit and cost estimates are then sampled uniformly within
    ±e_benefit and ±e_cost around the actual values.
    """

    model_config = ConfigDict(frozen=True)

    iterations: int = Field(
        default=DEFAULT_ITERATIONS,
        ge=1,
        description="""Number of Monte Carlo iterations N.""",
    )
    seed: int = Field(
        default=DEFAULT_SEED,
        ge=0,
        lt=2**64,
        description="""64-bit unsigned seed all substreams derive from.""",
    )
    case_source: Union[ProjectBand, PositiveFloat] = Field(
        default=ProjectBand.SMALL,
        description="""Project band to draw the actual cost from, or an
        explicit actual cost.""",
    )
    benefit_cost_ratio: PositiveFloat = Field(
        default=DEFAULT_RATIO,
        allow_inf_nan=False,
        description="""Actual benefit divided by actual cost.""",
    )
    e_benefit: float = Field(
        default=0.0,
        ge=0,
        le=1,
        description="""Relative error bound of the benefit estimate.""",
    )
    e_cost: float = Field(
        default=0.0,
        ge=0,
        lt=E_COST_CAP,
        description="""Relative error bound of the cost estimate.""",
    )
    n_jobs: int = Field(
        default=1,
        description="""Number of parallel workers (joblib semantics, -1 for
        all cores). Does not affect results.""",
    )
    chunk_size: int = Field(
        default=DEFAULT_CHUNK_SIZE,
        ge=1,
        description="""Iterations evaluated per work item. Does not affect
        results.""",
    )

    @field_validator("n_jobs")
    @classmethod
    def _check_n_jobs(cls, value: int) -> int:
        if value == 0:
            raise ValueError(
                "n_jobs must be a positive worker count or negative (-1 for all cores), not 0"
            )
        return value


class CaseRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    cost_act: Money
    benefit_act: Money
    roi_act: RoiValue
    benefit_cost_ratio: PositiveFloat
    band: Optional[ProjectBand] = Field(
        default=None,
        description="""Band the cost was drawn from, None for explicit costs.""",
    )


class DrawRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0)
    beta: Money = Field(description="""Sampled benefit estimate.""")
    zeta: Money = Field(description="""Sampled cost estimate.""")
    roi_est: RoiValue = Field(description="""ROI of the sampled estimates.""")


class DrawStatistics(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean: float
    std: float
    min: float
    max: float
    p5: float
    p50: float
    p95: float


class SimulationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    actual_roi: RoiValue = Field(description="""ROI of the actual case.""")
    mean_abs_error: float = Field(
        ge=0,
        description="""Mean absolute deviation of the estimated ROIs from the
        actual ROI.""",
    )
    draw_stats: DrawStatistics
    iterations: int
    seed: int
    case: CaseRecord
    roi_lower: RoiValue = Field(
        description="""Exact worst-case minimum for the sampled intervals.""",
    )
    roi_upper: RoiValue = Field(
        description="""Exact worst-case maximum for the sampled intervals.""",
    )
    containment: bool = Field(
        description="""True if every draw lies within [roi_lower, roi_upper].""",
    )
    config: SimulationConfig


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    e: float = Field(description="""Common relative error of benefits and costs.""")
    delta_r: float = Field(ge=0, description="""Mean absolute ROI error.""")
    ratio: float
    iterations: int
    seed: int


class ConvergenceRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    iterations: int
    spread: float = Field(ge=0, description="""max - min of δR across seeds.""")
    mean_delta_r: float
    min_delta_r: float
    max_delta_r: float
    seeds: int


class AnalyticComparison(BaseModel):
    model_config = ConfigDict(frozen=True)

    e_benefit: float
    e_cost: float
    roi: RoiValue
    max_probable_error: float
    probable_error: float
    roi_lower: RoiValue
    roi_upper: RoiValue
    mc_mean_abs_error: float
    containment: bool = Field(
        description="""All draws lie within the exact worst-case bounds.""",
    )
    ordering: bool = Field(
        description="""probable_error <= max_probable_error.""",
    )
