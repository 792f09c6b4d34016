"""
Closed-form propagation of benefit and cost errors through the ROI.

The approximations (maximum probable error and probable error) follow from
a first-order expansion of R = B / C - 1 and are trustworthy for relative
errors below roughly 15-20%. The exact worst-case bounds are computed
without any expansion and are always available next to them.

Three routes lead to the maximum probable error: expanding the worst-case
maximum, expanding the worst-case minimum, and differentiating the quotient
B / C. All of them end in the same expression, implemented once in
:func:`max_probable_error`.
"""

import math

from pyroi.core.exceptions import (
    DomainError,
    NegativeWorstCaseBenefitError,
    UndefinedRelativeError,
    WorstCaseDenominatorError,
)
from pyroi.core.models import Estimate


def max_probable_error(benefit: Estimate, cost: Estimate) -> float:
    """Approximate worst-case ROI error (B / C) * (δB / B + δC / C).

    Benefit and cost errors are assumed to combine in the most adverse
    direction, i.e. benefits overestimated and costs underestimated or
    vice versa.

    Args:
        benefit (Estimate): Total benefit and its absolute error.
        cost (Estimate): Total cost and its absolute error.

    Returns:
        float: The maximum probable error of the ROI as a fraction.

    Raises:
        UndefinedRelativeError: If the benefit or cost value is zero.

    Example:
        >>> max_probable_error(Estimate(value=200, abs_error=20), Estimate(value=100, abs_error=10))
        0.4
    """
    b_rel, c_rel = _relative_errors(benefit, cost)
    return (benefit.value / cost.value) * (b_rel + c_rel)


def probable_error(benefit: Estimate, cost: Estimate) -> float:
    """Approximate ROI error for independent random errors.

    Benefit and cost relative errors are added in quadrature:
    (B / C) * sqrt((δB / B)^2 + (δC / C)^2).

    Raises:
        UndefinedRelativeError: If the benefit or cost value is zero.
    """
    b_rel, c_rel = _relative_errors(benefit, cost)
    return (benefit.value / cost.value) * math.hypot(b_rel, c_rel)


def exact_worst_case_bounds(benefit: Estimate, cost: Estimate) -> tuple[float, float]:
    """Exact lower and upper ROI levels under worst-case errors.

    The maximum occurs with the largest benefit over the smallest cost,
    the minimum with the smallest benefit over the largest cost:

        lower = (B - δB) / (C + δC) - 1
        upper = (B + δB) / (C - δC) - 1

    Args:
        benefit (Estimate): Total benefit and its absolute error.
        cost (Estimate): Total cost and its absolute error.

    Returns:
        tuple[float, float]: The (lower, upper) ROI bounds.

    Raises:
        WorstCaseDenominatorError: If δC >= C.
        NegativeWorstCaseBenefitError: If δB > B.
    """

    if cost.abs_error >= cost.value:
        raise WorstCaseDenominatorError(cost.value, cost.abs_error)
    if benefit.abs_error > benefit.value:
        raise NegativeWorstCaseBenefitError(benefit.value, benefit.abs_error)

    lower = (benefit.value - benefit.abs_error) / (cost.value + cost.abs_error) - 1
    upper = (benefit.value + benefit.abs_error) / (cost.value - cost.abs_error) - 1

    return lower, upper


def relative_form(delta_r: float, roi: float) -> float:
    """Relative ROI error δR / |R|.

    This is the maximum probable error divided by the estimated ROI itself.
    It differs from the relative error of the quotient B / C, which is
    δB / B + δC / C (see :func:`quotient_relative_error`), by the factor
    (B / C) / (B / C - 1).

    Raises:
        UndefinedRelativeError: If the ROI is zero (break-even).
    """

    if roi == 0:
        raise UndefinedRelativeError("ROI")

    return delta_r / abs(roi)


def quotient_relative_error(benefit: Estimate, cost: Estimate) -> float:
    """Relative error of the quotient B / C, i.e. δB / B + δC / C."""
    b_rel, c_rel = _relative_errors(benefit, cost)
    return b_rel + c_rel


def _relative_errors(benefit: Estimate, cost: Estimate) -> tuple[float, float]:
    """Returns (δB / B, δC / C), rejecting zero values"""

    if cost.value <= 0:
        raise DomainError(
            f"relative error undefined at zero value: total cost is {cost.value!r}"
        )
    if benefit.value <= 0:
        raise UndefinedRelativeError("benefit")

    return benefit.abs_error / benefit.value, cost.abs_error / cost.value
