"""
Reading and writing scenario documents.

A scenario document is a JSON object of the following shape:

```json
{
  "name": "CRM rollout",
  "currency_label": "kUSD",
  "benefits": [
    {"label": "Savings", "amount": 200, "relative_error": 0.1}
  ],
  "costs": [
    {"label": "Licenses", "amount": 60, "error": 6},
    {"label": "Labour", "amount": 40, "relative_error": 0.1}
  ]
}
```

Every item gives its error either as an absolute amount (``error``) or as a
fraction of the amount (``relative_error``), never both. All errors are
normalized to absolute amounts when the document is turned into a
:class:`~pyroi.core.models.Scenario`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from pyroi.core.exceptions import ScenarioParseError
from pyroi.core.models import Component, Estimate, Scenario


class ItemDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str = Field(
        default=...,
        description="""Name of the benefit or cost item.""",
    )
    amount: float = Field(
        default=...,
        ge=0,
        allow_inf_nan=False,
        description="""Estimated amount of the item.""",
    )
    error: Optional[float] = Field(
        default=None,
        ge=0,
        allow_inf_nan=False,
        description="""Absolute error of the amount.""",
    )
    relative_error: Optional[float] = Field(
        default=None,
        ge=0,
        allow_inf_nan=False,
        description="""Error as a fraction of the amount.""",
    )

    @model_validator(mode="after")
    def _check_error_form(self) -> ItemDocument:
        if (self.error is None) == (self.relative_error is None):
            raise ValueError(
                "exactly one of 'error' (absolute) or 'relative_error' must be given"
            )
        if self.relative_error is not None and self.amount <= 0:
            raise ValueError("amount must be positive when a relative error is given")
        return self

    def to_estimate(self) -> Estimate:
        if self.relative_error is not None:
            return Estimate.from_relative(self.amount, self.relative_error)
        return Estimate(value=self.amount, abs_error=self.error)  # type: ignore


class ScenarioDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(
        default=...,
        description="""Name of the evaluated project or scenario.""",
    )
    currency_label: Optional[str] = Field(
        default=None,
        description="""Optional currency label, display only.""",
    )
    benefits: list[ItemDocument] = Field(
        default_factory=list,
        description="""Itemized benefits.""",
    )
    costs: list[ItemDocument] = Field(
        default_factory=list,
        description="""Itemized costs.""",
    )

    def to_scenario(self) -> Scenario:
        return Scenario(
            name=self.name,
            currency_label=self.currency_label,
            benefits=[_component(item) for item in self.benefits],
            costs=[_component(item) for item in self.costs],
        )

    @classmethod
    def from_scenario(cls, scenario: Scenario) -> ScenarioDocument:
        """Document with every error written as an absolute amount"""
        return cls(
            name=scenario.name,
            currency_label=scenario.currency_label,
            benefits=[_item(c) for c in scenario.benefits],
            costs=[_item(c) for c in scenario.costs],
        )


def parse_scenario(text: str) -> Scenario:
    """Parses a scenario document into a validated Scenario.

    Args:
        text (str): The JSON scenario document.

    Returns:
        Scenario: The scenario with all errors as absolute amounts.

    Raises:
        ScenarioParseError: If the document is malformed or violates an
            invariant. The error names the offending field.
    """

    try:
        document = ScenarioDocument.model_validate_json(text)
    except ValidationError as e:
        raise _parse_error(e) from e

    try:
        return document.to_scenario()
    except ValidationError as e:
        raise _parse_error(e) from e


def read_scenario(path: Path | str) -> Scenario:
    """Reads a scenario document from a file.

    Raises:
        FileNotFoundError: If the file does not exist.
        ScenarioParseError: If the document is invalid.
    """

    if isinstance(path, str):
        path = Path(path)

    if not path.exists():
        raise FileNotFoundError(f"The file '{path}' does not exist.")
    elif not path.is_file():
        raise ScenarioParseError(f"The path '{path}' is not a file.")

    return parse_scenario(path.read_text())


def dump_scenario(scenario: Scenario) -> str:
    """Serializes a Scenario to a JSON scenario document."""
    document = ScenarioDocument.from_scenario(scenario)
    data = document.model_dump(mode="json", exclude_none=True)
    return json.dumps(data, indent=2)


def _component(item: ItemDocument) -> Component:
    return Component(label=item.label, estimate=item.to_estimate())


def _item(component: Component) -> ItemDocument:
    return ItemDocument(
        label=component.label,
        amount=component.estimate.value,
        error=component.estimate.abs_error,
    )


def _parse_error(error: ValidationError) -> ScenarioParseError:
    first: dict[str, Any] = error.errors()[0]  # type: ignore
    path = _format_location(first.get("loc", ()))
    reason = str(first.get("msg", "invalid document")).removeprefix("Value error, ")
    return ScenarioParseError(reason, path or None)


def _format_location(loc: tuple) -> str:
    """Formats a pydantic error location as costs[0].relative_error"""
    path = ""
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else str(part)
    return path
