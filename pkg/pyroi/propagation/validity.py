import math

from pydantic import BaseModel, ConfigDict, Field

from pyroi.core.exceptions import DomainError

# Relative error above which the first-order approximations diverge quickly
TAYLOR_VALIDITY_THRESHOLD = 0.2


class ValidityRow(BaseModel):
    """
    One point of the comparison between the exact term 1 / (1 - x) and its
    first-order expansion 1 + x, which is where the maximum probable error
    loses accuracy.
    """

    model_config = ConfigDict(frozen=True)

    rel_error: float = Field(ge=0, lt=1)
    exact: float
    approx: float
    relative_gap: float = Field(ge=0)


def validity_row(x: float) -> ValidityRow:
    """Evaluates the exact and the approximated term at relative error x."""

    if not 0 <= x < 1:
        raise DomainError(
            f"relative error must lie in [0, 1), got {x!r} (pole of 1 / (1 - x) at 1)"
        )

    exact = 1 / (1 - x)
    approx = 1 + x

    return ValidityRow(
        rel_error=x,
        exact=exact,
        approx=approx,
        relative_gap=(exact - approx) / exact,
    )


def taylor_validity_table(max_x: float = 0.95, step: float = 0.05) -> list[ValidityRow]:
    """Tabulates the gap between 1 / (1 - x) and 1 + x on a grid.

    Rows are produced for x = 0, step, 2 * step, ... up to and including
    max_x. The relative gap equals x^2 and grows quickly once x exceeds
    15-20%.

    Args:
        max_x (float): Largest relative error, strictly below 1.
        step (float): Grid spacing, 0 < step <= max_x.

    Returns:
        list[ValidityRow]: The table rows in ascending order of x.

    Raises:
        DomainError: If max_x >= 1 or the step is not in (0, max_x].
    """

    if max_x >= 1:
        raise DomainError(
            f"max relative error must be below 1 (pole of 1 / (1 - x)), got {max_x!r}"
        )
    if not 0 < step <= max_x:
        raise DomainError(f"step must satisfy 0 < step <= max_x, got {step!r}")

    count = math.floor(max_x / step + 1e-9)
    return [validity_row(round(k * step, 12)) for k in range(count + 1)]
