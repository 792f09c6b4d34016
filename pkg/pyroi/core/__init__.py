from .exceptions import (
    DomainError,
    NegativeWorstCaseBenefitError,
    ScenarioParseError,
    UndefinedRelativeError,
    WorstCaseDenominatorError,
)
from .models import Component, Estimate, Money, Ratio, RoiValue, Scenario
from .roi import compute_roi, relative_error_of, total_value

__all__ = [
    "Component",
    "DomainError",
    "Estimate",
    "Money",
    "NegativeWorstCaseBenefitError",
    "Ratio",
    "RoiValue",
    "Scenario",
    "ScenarioParseError",
    "UndefinedRelativeError",
    "WorstCaseDenominatorError",
    "compute_roi",
    "relative_error_of",
    "total_value",
]
