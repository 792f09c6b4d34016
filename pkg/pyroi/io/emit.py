from __future__ import annotations

import json
from enum import Enum
from typing import Any, Mapping, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel

# Fields holding dimensionless fractions, scaled by 100 when percent output
# is requested
PERCENT_FIELDS = frozenset(
    {
        "roi",
        "actual_roi",
        "roi_act",
        "roi_est",
        "roi_lower",
        "roi_upper",
        "max_probable_error",
        "probable_error",
        "relative_max_error",
        "quotient_relative_error",
        "mean_abs_error",
        "mc_mean_abs_error",
        "e",
        "e_benefit",
        "e_cost",
        "delta_r",
        "rel_error",
        "relative_gap",
        "spread",
        "mean_delta_r",
        "min_delta_r",
        "max_delta_r",
        "mean",
        "std",
        "min",
        "max",
        "p5",
        "p50",
        "p95",
    }
)

Emittable = Union[BaseModel, Sequence[BaseModel], Mapping[str, Any]]


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


def emit(
    result: Emittable,
    format: OutputFormat | str = OutputFormat.CSV,
    row_type: Optional[type[BaseModel]] = None,
    percent: bool = False,
) -> str:
    """Serializes a result deterministically to CSV or JSON text.

    Lists of rows (sweep, validity, convergence tables) become one CSV line
    per row with the model fields as columns, in declaration order. A single
    model becomes a one-row CSV with nested fields flattened into dotted
    column names. Floats are written with their shortest round-trip
    representation.

    Args:
        result: A model, a list of row models or a mapping of named models.
        format (OutputFormat | str): ``csv`` or ``json``.
        row_type (type[BaseModel], optional): Row model of an empty list, used
            to write the header of an empty table.
        percent (bool): Scale fraction fields by 100.

    Returns:
        str: The serialized result, terminated by a newline.

    Example:
        >>> emit([SweepRow(e=0.05, delta_r=0.0667, ratio=2.0, iterations=30000, seed=42)])
        'e,delta_r,ratio,iterations,seed\\n0.05,0.0667,2.0,30000,42\\n'
    """

    format = OutputFormat(format)

    if format is OutputFormat.JSON:
        data = _to_jsonable(result)
        if percent:
            data = _scale_percent(data)
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    df = to_pandas(result, row_type=row_type)
    if percent:
        for column in df.columns:
            if column.split(".")[-1] in PERCENT_FIELDS:
                df[column] = df[column] * 100

    return df.to_csv(index=False, lineterminator="\n")


def to_pandas(
    result: Emittable,
    row_type: Optional[type[BaseModel]] = None,
) -> pd.DataFrame:
    """Converts results to a pandas DataFrame.

    Args:
        result: A model, a list of row models or a mapping of named models.
        row_type (type[BaseModel], optional): Row model of an empty list.

    Returns:
        pd.DataFrame: One row per list entry, or a single flattened row.
    """

    if isinstance(result, BaseModel):
        return pd.json_normalize(result.model_dump(mode="json"), sep=".")

    if isinstance(result, Mapping):
        return pd.json_normalize(_to_jsonable(result), sep=".")

    rows = list(result)
    if not rows:
        columns = list(row_type.model_fields) if row_type is not None else []
        return pd.DataFrame(columns=columns)

    columns = list(type(rows[0]).model_fields)
    return pd.DataFrame([row.model_dump(mode="json") for row in rows], columns=columns)


def _to_jsonable(result: Any) -> Any:
    if isinstance(result, BaseModel):
        return result.model_dump(mode="json")
    if isinstance(result, Mapping):
        return {key: _to_jsonable(value) for key, value in result.items()}
    if isinstance(result, (list, tuple)):
        return [_to_jsonable(value) for value in result]
    return result


def _scale_percent(data: Any, key: Optional[str] = None) -> Any:
    if isinstance(data, dict):
        return {k: _scale_percent(v, k) for k, v in data.items()}
    if isinstance(data, list):
        return [_scale_percent(v, key) for v in data]
    if key in PERCENT_FIELDS and isinstance(data, (int, float)) and not isinstance(data, bool):
        return data * 100
    return data
