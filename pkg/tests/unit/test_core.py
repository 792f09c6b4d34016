import math

import pytest
from pydantic import ValidationError

from pyroi.core import (
    Component,
    DomainError,
    Estimate,
    Scenario,
    UndefinedRelativeError,
    compute_roi,
    relative_error_of,
    total_value,
)


class TestComputeRoi:
    @pytest.mark.parametrize(
        "benefit, cost, expected",
        [(200, 100, 1.0), (100, 100, 0.0), (50, 100, -0.5)],
    )
    def test_examples(self, benefit, cost, expected):
        # Act
        roi = compute_roi(benefit, cost)

        # Assert
        assert roi == expected, f"Expected ROI {expected}. Got {roi}"

    @pytest.mark.parametrize("cost", [0, -10])
    def test_non_positive_cost(self, cost):
        with pytest.raises(DomainError):
            compute_roi(100, cost)

    def test_non_finite_amount(self):
        with pytest.raises(DomainError):
            compute_roi(math.inf, 100)

    @pytest.mark.parametrize("cost", [0.1, 1, 37.5, 1300, 1e9])
    def test_break_even(self, cost):
        assert compute_roi(cost, cost) == 0.0, "ROI of B = C must be exactly zero"

    @pytest.mark.parametrize("k", [0.25, 2, 1024])
    def test_scale_invariance(self, k):
        # Arrange
        benefit, cost = 173.0, 129.0

        # Act
        scaled = compute_roi(k * benefit, k * cost)

        # Assert
        assert scaled == compute_roi(benefit, cost), (
            f"Scaling by {k} changed the ROI to {scaled}"
        )


class TestTotalValue:
    @pytest.mark.parametrize(
        "values, expected",
        [([100, 50], 150), ([], 0), ([42], 42)],
    )
    def test_examples(self, values, expected):
        # Arrange
        estimates = [Estimate(value=v) for v in values]

        # Act
        total = total_value(estimates)

        # Assert
        assert total == expected, f"Expected {expected}. Got {total}"

    def test_permutation_invariance(self):
        # Arrange
        estimates = [Estimate(value=v) for v in [0.1, 1e6, 0.2, 3.3, 1e-3]]

        # Act
        forward = total_value(estimates)
        backward = total_value(reversed(estimates))

        # Assert
        assert forward == backward, "Total must not depend on the order"

    def test_additive_over_concatenation(self):
        # Arrange
        first = [Estimate(value=v) for v in [12.5, 7.25]]
        second = [Estimate(value=v) for v in [100.0, 0.125]]

        # Act
        total = total_value(first + second)

        # Assert
        assert total == total_value(first) + total_value(second)


class TestRelativeError:
    def test_examples(self):
        assert relative_error_of(Estimate(value=200, abs_error=20)) == pytest.approx(0.1)
        assert relative_error_of(Estimate(value=100, abs_error=0)) == 0.0

    def test_zero_value(self):
        with pytest.raises(UndefinedRelativeError):
            relative_error_of(Estimate(value=0, abs_error=5))

    def test_from_relative(self):
        # Act
        estimate = Estimate.from_relative(200, 0.1)

        # Assert
        assert estimate.abs_error == pytest.approx(20)
        assert estimate.relative_error == pytest.approx(0.1)


class TestModels:
    def test_negative_error_rejected(self):
        with pytest.raises(ValidationError):
            Estimate(value=100, abs_error=-1)

    def test_estimate_is_immutable(self):
        # Arrange
        estimate = Estimate(value=100, abs_error=1)

        # Act
        with pytest.raises(ValidationError):
            estimate.value = 5  # type: ignore

    def test_scenario_requires_costs(self):
        with pytest.raises(ValidationError, match="total cost must be positive"):
            Scenario(
                name="No costs",
                benefits=[Component(label="b", estimate=Estimate(value=10))],
            )

    def test_scenario_rejects_cost_error_of_100_percent(self):
        with pytest.raises(ValidationError, match="cost error"):
            Scenario(
                name="Too uncertain",
                costs=[
                    Component(label="a", estimate=Estimate(value=50, abs_error=50)),
                    Component(label="b", estimate=Estimate(value=50, abs_error=50)),
                ],
            )

    def test_scenario_totals(self, simple_scenario):
        assert simple_scenario.benefit_total() == 200
        assert simple_scenario.cost_total() == 100
