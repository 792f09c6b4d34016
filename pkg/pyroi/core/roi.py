from __future__ import annotations

import math
from typing import TYPE_CHECKING, Iterable

from pyroi.core.exceptions import DomainError, UndefinedRelativeError

if TYPE_CHECKING:
    from pyroi.core.models import Estimate


def compute_roi(benefit_total: float, cost_total: float) -> float:
    """Computes the return on investment (B - C) / C as a fraction.

    A value of 1.0 corresponds to an ROI of 100%. Negative values are valid
    and denote a loss.

    Args:
        benefit_total (float): The total benefit, a non-negative amount.
        cost_total (float): The total cost, a positive amount.

    Returns:
        float: The dimensionless ROI.

    Raises:
        DomainError: If the cost is not positive or an amount is not a finite
            non-negative number.

    Example:
        >>> compute_roi(200, 100)
        1.0
    """

    _check_money(benefit_total, "benefit")
    _check_money(cost_total, "cost")

    if cost_total <= 0:
        raise DomainError(
            f"total cost must be positive to compute an ROI, got {cost_total!r}"
        )

    # Single-use form B / C - 1, so B and C each enter the quotient once
    return benefit_total / cost_total - 1


def total_value(components: Iterable[Estimate]) -> float:
    """Sums the values of the given estimates. An empty list sums to 0.

    Uses an exactly rounded summation, hence the result does not depend on
    the order of the components.
    """
    return math.fsum(component.value for component in components)


def relative_error_of(estimate: Estimate) -> float:
    """Returns the relative error abs_error / value of an estimate.

    Raises:
        UndefinedRelativeError: If the value of the estimate is zero.
    """

    if estimate.value <= 0:
        raise UndefinedRelativeError("value")

    return estimate.abs_error / estimate.value


def _check_money(amount: float, name: str) -> None:
    if not math.isfinite(amount):
        raise DomainError(f"{name} must be finite, got {amount!r}")
    if amount < 0:
        raise DomainError(f"{name} must be non-negative, got {amount!r}")
