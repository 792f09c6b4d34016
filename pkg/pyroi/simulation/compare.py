from pyroi.core.models import Estimate
from pyroi.propagation.analytic import (
    exact_worst_case_bounds,
    max_probable_error,
    probable_error,
)
from pyroi.simulation.models import AnalyticComparison, SimulationResult


def compare_with_analytic(result: SimulationResult) -> AnalyticComparison:
    """Places the analytic error measures next to a Monte Carlo result.

    The analytic values are computed from the estimates (B, B * e_b) and
    (C, C * e_c) of the simulated case. The simulated error is a mean
    absolute deviation while the analytic ones are bound-style errors, so no
    fixed relation between them is implied.

    Args:
        result (SimulationResult): A finished simulation.

    Returns:
        AnalyticComparison: Analytic and simulated errors with containment
            and ordering flags.
    """

    config = result.config
    case = result.case

    benefit = Estimate(value=case.benefit_act, abs_error=case.benefit_act * config.e_benefit)
    cost = Estimate(value=case.cost_act, abs_error=case.cost_act * config.e_cost)

    lower, upper = exact_worst_case_bounds(benefit, cost)
    delta_max = max_probable_error(benefit, cost)
    delta_probable = probable_error(benefit, cost)

    return AnalyticComparison(
        e_benefit=config.e_benefit,
        e_cost=config.e_cost,
        roi=result.actual_roi,
        max_probable_error=delta_max,
        probable_error=delta_probable,
        roi_lower=lower,
        roi_upper=upper,
        mc_mean_abs_error=result.mean_abs_error,
        containment=result.containment,
        ordering=delta_probable <= delta_max,
    )
