"""
Domain types shared by the propagation, simulation and io packages.

Amounts are abstract, currency-free non-negative reals. The project bands
used by the simulation interpret them as thousands, which is a display
convention only. ROI values are plain floats holding fractions, where
1.0 corresponds to 100%.
"""

from __future__ import annotations

import math
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pyroi.core.roi import relative_error_of, total_value

Money = Annotated[float, Field(ge=0, allow_inf_nan=False)]
Ratio = Annotated[float, Field(ge=0, allow_inf_nan=False)]
RoiValue = Annotated[float, Field(allow_inf_nan=False)]


class Estimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Money = Field(
        default=...,
        description="""Estimated monetary amount.""",
    )
    abs_error: Money = Field(
        default=0.0,
        description="""Absolute error bound of the estimate, in the same units
        as the value.""",
    )

    @classmethod
    def from_relative(cls, value: float, rel_error: float) -> Estimate:
        """Creates an estimate from a value and a relative error fraction."""
        return cls(value=value, abs_error=value * rel_error)

    @property
    def relative_error(self) -> float:
        return relative_error_of(self)

    def scaled(self, factor: float) -> Estimate:
        """Returns the estimate with value and error multiplied by factor."""
        return Estimate(value=self.value * factor, abs_error=self.abs_error * factor)


class Component(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str = Field(
        default=...,
        description="""Name of the benefit or cost item.""",
    )
    estimate: Estimate = Field(
        default=...,
        description="""Estimated amount of the item and its error.""",
    )


class Scenario(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(
        default=...,
        description="""Name of the evaluated project or scenario.""",
    )
    currency_label: Optional[str] = Field(
        default=None,
        description="""Optional label of the currency unit, display only.""",
    )
    benefits: list[Component] = Field(
        default_factory=list,
        description="""Itemized benefits (financial returns) of the project.""",
    )
    costs: list[Component] = Field(
        default_factory=list,
        description="""Itemized costs of the project. At least one is required.""",
    )

    @model_validator(mode="after")
    def _check_costs(self) -> Scenario:
        if not self.costs:
            raise ValueError("total cost must be positive: no cost components given")

        cost = self.cost_total()
        if cost <= 0:
            raise ValueError(f"total cost must be positive, got {cost!r}")

        # Summed errors bound the quadrature ones, so this covers both modes
        cost_error = math.fsum(c.estimate.abs_error for c in self.costs)
        if cost_error >= cost:
            raise ValueError(
                f"cost error >= 100%: aggregated cost error {cost_error!r} "
                f"is not below total cost {cost!r}"
            )

        return self

    def benefit_total(self) -> float:
        return total_value(c.estimate for c in self.benefits)

    def cost_total(self) -> float:
        return total_value(c.estimate for c in self.costs)

    def benefit_estimates(self) -> list[Estimate]:
        return [c.estimate for c in self.benefits]

    def cost_estimates(self) -> list[Estimate]:
        return [c.estimate for c in self.costs]
