from __future__ import annotations

from typing import Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from pyroi.core.exceptions import WorstCaseDenominatorError
from pyroi.core.models import Estimate, RoiValue, Scenario
from pyroi.core.roi import compute_roi
from pyroi.propagation.aggregation import AggregationMode, aggregate
from pyroi.propagation.analytic import (
    exact_worst_case_bounds,
    max_probable_error,
    probable_error,
    quotient_relative_error,
    relative_form,
)
from pyroi.propagation.validity import TAYLOR_VALIDITY_THRESHOLD


class ErrorReport(BaseModel):
    model_config = ConfigDict(frozen=True, use_enum_values=False)

    roi: RoiValue = Field(
        default=...,
        description="""Estimated ROI (B - C) / C as a fraction.""",
    )
    max_probable_error: float = Field(
        default=...,
        ge=0,
        description="""Approximate worst-case ROI error (B / C)(δB / B + δC / C).""",
    )
    probable_error: float = Field(
        default=...,
        ge=0,
        description="""Approximate ROI error for independent errors, relative
        errors added in quadrature.""",
    )
    roi_upper: RoiValue = Field(
        default=...,
        description="""Exact worst-case maximum (B + δB) / (C - δC) - 1.""",
    )
    roi_lower: RoiValue = Field(
        default=...,
        description="""Exact worst-case minimum (B - δB) / (C + δC) - 1.""",
    )
    relative_max_error: Optional[float] = Field(
        default=None,
        description="""Maximum probable error divided by |ROI|. None at
        break-even, where it is undefined.""",
    )
    quotient_relative_error: float = Field(
        default=...,
        ge=0,
        description="""Relative error of the quotient B / C, δB / B + δC / C.""",
    )
    benefit_total: Estimate = Field(
        default=...,
        description="""Aggregated total benefit and its error.""",
    )
    cost_total: Estimate = Field(
        default=...,
        description="""Aggregated total cost and its error.""",
    )
    aggregation_mode: AggregationMode = Field(
        default=AggregationMode.SUM,
        description="""How component errors were aggregated into the totals.""",
    )
    exceeds_taylor_threshold: bool = Field(
        default=False,
        description="""True if a relative error exceeds the range in which the
        first-order approximations hold (20%).""",
    )

    @property
    def upward_deviation(self) -> float:
        """Exact distance from the ROI to its worst-case maximum"""
        return self.roi_upper - self.roi

    @property
    def downward_deviation(self) -> float:
        """Exact distance from the ROI to its worst-case minimum"""
        return self.roi - self.roi_lower


def error_report(
    benefit: Estimate,
    cost: Estimate,
    mode: AggregationMode = AggregationMode.SUM,
) -> ErrorReport:
    """Builds an ErrorReport from total benefit and cost estimates.

    Args:
        benefit (Estimate): Total benefit and its absolute error.
        cost (Estimate): Total cost and its absolute error.
        mode (AggregationMode): Recorded aggregation mode of the totals.

    Returns:
        ErrorReport: ROI, approximate errors and exact bounds.

    Raises:
        WorstCaseDenominatorError: If the cost error is not below the cost.
        NegativeWorstCaseBenefitError: If the benefit error exceeds the benefit.
        UndefinedRelativeError: If the benefit or cost value is zero.
    """

    roi = compute_roi(benefit.value, cost.value)
    lower, upper = exact_worst_case_bounds(benefit, cost)
    delta_max = max_probable_error(benefit, cost)
    delta_probable = probable_error(benefit, cost)

    relative_max = None if roi == 0 else relative_form(delta_max, roi)

    exceeds = (
        benefit.relative_error > TAYLOR_VALIDITY_THRESHOLD
        or cost.relative_error > TAYLOR_VALIDITY_THRESHOLD
    )
    if exceeds:
        logger.warning(
            f"Relative errors (benefit {benefit.relative_error:.3g}, cost "
            f"{cost.relative_error:.3g}) exceed {TAYLOR_VALIDITY_THRESHOLD:.0%}. "
            "Approximate errors may underestimate the exact bounds."
        )

    return ErrorReport(
        roi=roi,
        max_probable_error=delta_max,
        probable_error=delta_probable,
        roi_upper=upper,
        roi_lower=lower,
        relative_max_error=relative_max,
        quotient_relative_error=quotient_relative_error(benefit, cost),
        benefit_total=benefit,
        cost_total=cost,
        aggregation_mode=mode,
        exceeds_taylor_threshold=exceeds,
    )


def scenario_error_report(
    scenario: Scenario,
    mode: AggregationMode = AggregationMode.SUM,
) -> ErrorReport:
    """Estimates the ROI errors of an itemized scenario.

    Component errors are first aggregated into total benefit and cost
    errors, summed for ``AggregationMode.SUM`` or added in quadrature for
    ``AggregationMode.QUADRATURE``. The totals are then propagated through
    the ROI. Exact bounds are always computed from the aggregated totals.

    Args:
        scenario (Scenario): The itemized scenario.
        mode (AggregationMode): The aggregation rule.

    Returns:
        ErrorReport: The full error report.

    Raises:
        WorstCaseDenominatorError: If the aggregated cost error is not below
            the total cost.
    """

    benefit = aggregate(scenario.benefit_estimates(), mode)
    cost = aggregate(scenario.cost_estimates(), mode)

    logger.debug(
        f"Scenario '{scenario.name}' aggregated ({mode.value}): "
        f"B = {benefit.value!r} ± {benefit.abs_error!r}, "
        f"C = {cost.value!r} ± {cost.abs_error!r}"
    )

    if cost.abs_error >= cost.value:
        raise WorstCaseDenominatorError(cost.value, cost.abs_error)

    return error_report(benefit, cost, mode)
