from .bands import BAND_RANGES, ProjectBand
from .compare import compare_with_analytic
from .convergence import DEFAULT_N_LIST, DEFAULT_SEED_COUNT, convergence_study
from .engine import (
    build_case,
    config_from_scenario,
    draw_estimates,
    iter_draws,
    run_simulation,
    sample_draw,
)
from .models import (
    DEFAULT_ITERATIONS,
    DEFAULT_RATIO,
    DEFAULT_SEED,
    E_COST_CAP,
    AnalyticComparison,
    CaseRecord,
    ConvergenceRow,
    DrawRecord,
    DrawStatistics,
    SimulationConfig,
    SimulationResult,
    SweepRow,
)
from .streams import Substreams
from .sweep import RANGE_LIMITS, SweepRange, run_sweep, sweep_grid

__all__ = [
    "AnalyticComparison",
    "BAND_RANGES",
    "CaseRecord",
    "ConvergenceRow",
    "DEFAULT_ITERATIONS",
    "DEFAULT_N_LIST",
    "DEFAULT_RATIO",
    "DEFAULT_SEED",
    "DEFAULT_SEED_COUNT",
    "DrawRecord",
    "DrawStatistics",
    "E_COST_CAP",
    "ProjectBand",
    "RANGE_LIMITS",
    "SimulationConfig",
    "SimulationResult",
    "Substreams",
    "SweepRange",
    "SweepRow",
    "build_case",
    "compare_with_analytic",
    "config_from_scenario",
    "convergence_study",
    "draw_estimates",
    "iter_draws",
    "run_simulation",
    "sample_draw",
    "sweep_grid",
]
