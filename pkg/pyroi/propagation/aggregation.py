import math
from enum import Enum
from typing import Iterable, Sequence

from pyroi.core.exceptions import DomainError
from pyroi.core.models import Estimate
from pyroi.core.roi import total_value


class AggregationMode(Enum):
    """
    How the errors of itemized benefits or costs are combined.

    SUM adds the absolute errors (maximum probable error), QUADRATURE takes
    the square root of the summed squares (probable error).
    """

    SUM = "sum"
    QUADRATURE = "quadrature"


def aggregate_error_sum(component_errors: Iterable[float]) -> float:
    """Adds absolute component errors. An empty list yields 0."""
    errors = _checked(component_errors)
    return math.fsum(errors)


def aggregate_error_quadrature(component_errors: Iterable[float]) -> float:
    """Sums absolute component errors in quadrature, sqrt(sum(δ_i^2)).

    Example:
        >>> aggregate_error_quadrature([3, 4])
        5.0
    """
    errors = _checked(component_errors)
    return math.hypot(*errors)


def aggregate(estimates: Sequence[Estimate], mode: AggregationMode) -> Estimate:
    """Combines component estimates into a single total estimate.

    The total value is the plain sum of the component values, the total
    error is aggregated according to ``mode``.

    Args:
        estimates (Sequence[Estimate]): The component estimates.
        mode (AggregationMode): The error aggregation rule.

    Returns:
        Estimate: The total estimate.
    """
    errors = [e.abs_error for e in estimates]

    if mode is AggregationMode.SUM:
        abs_error = aggregate_error_sum(errors)
    elif mode is AggregationMode.QUADRATURE:
        abs_error = aggregate_error_quadrature(errors)
    else:
        raise ValueError(f"Unknown aggregation mode '{mode}'")

    return Estimate(value=total_value(estimates), abs_error=abs_error)


def _checked(component_errors: Iterable[float]) -> list[float]:
    errors = [float(e) for e in component_errors]
    for index, error in enumerate(errors):
        if not error >= 0 or not math.isfinite(error):
            raise DomainError(
                f"component error #{index} must be a finite non-negative amount, got {error!r}"
            )
    return errors
