from .emit import PERCENT_FIELDS, OutputFormat, emit, to_pandas
from .handler import ROIHandler
from .scenario import (
    ItemDocument,
    ScenarioDocument,
    dump_scenario,
    parse_scenario,
    read_scenario,
)

__all__ = [
    "ItemDocument",
    "OutputFormat",
    "PERCENT_FIELDS",
    "ROIHandler",
    "ScenarioDocument",
    "dump_scenario",
    "emit",
    "parse_scenario",
    "read_scenario",
    "to_pandas",
]
