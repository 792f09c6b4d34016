from typing import Optional


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an ROI formula"""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)

    def __str__(self) -> str:
        return self.message


class WorstCaseDenominatorError(DomainError):
    """Raised when the worst-case cost C - δC is not positive"""

    def __init__(self, cost: float, cost_error: float):
        self.cost = cost
        self.cost_error = cost_error
        super().__init__(
            f"worst-case denominator non-positive: cost error {cost_error!r} "
            f">= total cost {cost!r} (cost error >= 100%)"
        )


class NegativeWorstCaseBenefitError(DomainError):
    """Raised when the worst-case benefit B - δB is negative"""

    def __init__(self, benefit: float, benefit_error: float):
        self.benefit = benefit
        self.benefit_error = benefit_error
        super().__init__(
            f"negative worst-case benefit: benefit error {benefit_error!r} "
            f"> total benefit {benefit!r}"
        )


class UndefinedRelativeError(DomainError):
    """Raised when a relative error is requested for a zero reference value"""

    def __init__(self, what: str = "value"):
        self.what = what
        super().__init__(f"relative error undefined at zero {what}")


class ScenarioParseError(ValueError):
    """Raised when a scenario document cannot be turned into a Scenario"""

    def __init__(self, reason: str, path: Optional[str] = None):
        self.path = path
        self.reason = reason
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.path:
            return f"{self.path}: {self.reason}"
        return self.reason
