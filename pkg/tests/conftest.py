from pathlib import Path

import numpy as np
import pytest

import pyroi as pr

FIXTURES = Path(__file__).parent / "fixtures" / "scenarios"


@pytest.fixture
def fixture_path():
    def _path(name: str) -> Path:
        return FIXTURES / name

    return _path


@pytest.fixture
def simple_scenario():
    return pr.read_scenario(FIXTURES / "simple.json")


@pytest.fixture
def itemized_scenario():
    return pr.read_scenario(FIXTURES / "itemized.json")


@pytest.fixture
def benefit():
    return pr.Estimate(value=200, abs_error=20)


@pytest.fixture
def cost():
    return pr.Estimate(value=100, abs_error=10)


@pytest.fixture
def integration_oracle():
    """Mean absolute ROI error by fine-grid integration over (u, v).

    Averages |r (1 + u e_b) / (1 + v e_c) - r| over the midpoints of an
    n x n grid on [-1, 1]^2, independently of the Monte Carlo engine.
    """

    def _oracle(ratio: float, e_benefit: float, e_cost: float, n: int = 2001) -> float:
        midpoints = -1.0 + (np.arange(n) + 0.5) * (2.0 / n)
        numerator = 1.0 + midpoints[:, None] * e_benefit
        denominator = 1.0 + midpoints[None, :] * e_cost
        return float(ratio * np.abs(numerator / denominator - 1.0).mean())

    return _oracle
