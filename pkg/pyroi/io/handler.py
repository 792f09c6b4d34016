from pathlib import Path
from typing import Optional

import pandas as pd
import rich
from pydantic import BaseModel

from pyroi.core.models import Scenario
from pyroi.io.emit import Emittable, OutputFormat, emit, to_pandas
from pyroi.io.scenario import dump_scenario, parse_scenario, read_scenario


class ROIHandler:
    """Handler for scenario documents and result serialization.

    This class groups reading and writing of scenario documents and the
    conversion of results to CSV, JSON and pandas DataFrames.
    """

    @classmethod
    def read_scenario(cls, path: Path | str) -> Scenario:
        """Read a scenario document from a file.

        Args:
            path: Path to the JSON scenario document

        Returns:
            A validated Scenario with absolute errors

        Raises:
            FileNotFoundError: If the file does not exist
            ScenarioParseError: If the document is invalid
        """
        return read_scenario(path)

    @classmethod
    def read_scenario_from_string(cls, data: str) -> Scenario:
        """Read a scenario document from a string."""
        return parse_scenario(data)

    @classmethod
    def write_scenario(
        cls,
        scenario: Scenario,
        path: Path | str | None = None,
    ) -> Optional[str]:
        """Write a scenario document to a file or return it as a string.

        Args:
            scenario: The scenario to write
            path: Path to write the document to. If None, returns the document as a string

        Returns:
            The document as a string if path is None, otherwise None
        """
        data = dump_scenario(scenario)

        if path is None:
            return data
        elif isinstance(path, str):
            path = Path(path)

        if path.is_dir():
            path = path / "scenario.json"

        path.write_text(data)

        rich.print(f"\n  Scenario written to [green][bold]{path}[/bold][/green]\n")

    @classmethod
    def emit(
        cls,
        result: Emittable,
        format: OutputFormat | str = OutputFormat.CSV,
        row_type: Optional[type[BaseModel]] = None,
        percent: bool = False,
    ) -> str:
        """Serialize a result to CSV or JSON text."""
        return emit(result, format, row_type=row_type, percent=percent)

    @classmethod
    def to_pandas(
        cls,
        result: Emittable,
        row_type: Optional[type[BaseModel]] = None,
    ) -> pd.DataFrame:
        """Convert a result or a table of rows to a pandas DataFrame."""
        return to_pandas(result, row_type=row_type)
