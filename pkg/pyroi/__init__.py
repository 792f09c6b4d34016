from __future__ import annotations

__version__ = "0.1.0"

from .core import *  # noqa: F403
from .io.emit import OutputFormat
from .io.handler import ROIHandler
from .pretty import summary
from .propagation import *  # noqa: F403
from .simulation import *  # noqa: F403

# Input functions
read_scenario = ROIHandler.read_scenario
read_scenario_from_string = ROIHandler.read_scenario_from_string

# Output functions
write_scenario = ROIHandler.write_scenario
emit = ROIHandler.emit
to_pandas = ROIHandler.to_pandas

__all__ = [
    "ROIHandler",
    "OutputFormat",
    "read_scenario",
    "read_scenario_from_string",
    "write_scenario",
    "emit",
    "to_pandas",
    "summary",
    "compute_roi",
    "total_value",
    "relative_error_of",
    "Estimate",
    "Component",
    "Scenario",
    "ErrorReport",
    "scenario_error_report",
    "max_probable_error",
    "probable_error",
    "exact_worst_case_bounds",
    "taylor_validity_table",
    "SimulationConfig",
    "run_simulation",
    "run_sweep",
    "convergence_study",
    "compare_with_analytic",
]
