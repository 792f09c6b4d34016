from .aggregation import (
    AggregationMode,
    aggregate,
    aggregate_error_quadrature,
    aggregate_error_sum,
)
from .analytic import (
    exact_worst_case_bounds,
    max_probable_error,
    probable_error,
    quotient_relative_error,
    relative_form,
)
from .report import ErrorReport, error_report, scenario_error_report
from .validity import (
    TAYLOR_VALIDITY_THRESHOLD,
    ValidityRow,
    taylor_validity_table,
    validity_row,
)

__all__ = [
    "AggregationMode",
    "ErrorReport",
    "TAYLOR_VALIDITY_THRESHOLD",
    "ValidityRow",
    "aggregate",
    "aggregate_error_quadrature",
    "aggregate_error_sum",
    "error_report",
    "exact_worst_case_bounds",
    "max_probable_error",
    "probable_error",
    "quotient_relative_error",
    "relative_form",
    "scenario_error_report",
    "taylor_validity_table",
    "validity_row",
]
