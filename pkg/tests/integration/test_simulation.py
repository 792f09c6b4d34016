import numpy as np
import pytest
from pydantic import ValidationError

import pyroi as pr
from pyroi.core import DomainError
from pyroi.simulation import (
    BAND_RANGES,
    ProjectBand,
    SimulationConfig,
    Substreams,
    build_case,
    config_from_scenario,
    draw_estimates,
    iter_draws,
    run_simulation,
    sample_draw,
)


class TestBuildCase:
    def test_explicit_cost(self):
        # Act
        case = build_case(100.0, 2.0, Substreams(1))

        # Assert
        assert (case.cost_act, case.benefit_act, case.roi_act) == (100.0, 200.0, 1.0)
        assert case.band is None

    def test_break_even_ratio(self):
        case = build_case(350.0, 1.0, Substreams(1))
        assert case.roi_act == 0.0

    @pytest.mark.parametrize("seed", range(20))
    def test_small_band(self, seed):
        # Act
        case = build_case(ProjectBand.SMALL, 2.0, Substreams(seed))

        # Assert
        assert 100 <= case.cost_act <= 500, f"Cost {case.cost_act} outside small band"
        assert case.band is ProjectBand.SMALL

    def test_any_band(self):
        # Act
        cases = [build_case(ProjectBand.ANY, 1.5, Substreams(seed)) for seed in range(60)]

        # Assert
        for case in cases:
            low, high = BAND_RANGES[case.band]
            assert low <= case.cost_act <= high
        assert {case.band for case in cases} == set(ProjectBand.concrete())

    @pytest.mark.parametrize("ratio", [0.0, -1.0])
    def test_invalid_ratio(self, ratio):
        with pytest.raises(DomainError):
            build_case(100.0, ratio, Substreams(1))


class TestSampleDraw:
    def test_degenerate_interval(self):
        # Act
        draw = sample_draw(200, 100, 0.0, 0.0, Substreams(3), index=17)

        # Assert
        assert (draw.beta, draw.zeta, draw.roi_est) == (200, 100, 1.0)

    def test_interval_endpoints(self):
        # Arrange
        streams = Substreams(5)

        for index in range(500):
            # Act
            draw = sample_draw(200, 100, 0.1, 0.1, streams, index)

            # Assert
            assert 180 <= draw.beta <= 220
            assert 90 <= draw.zeta <= 110
            assert 180 / 110 - 1 - 1e-12 <= draw.roi_est <= 220 / 90 - 1 + 1e-12

    def test_large_cost_error(self):
        streams = Substreams(6)
        zetas = [sample_draw(200, 100, 0.0, 0.5, streams, i).zeta for i in range(500)]
        assert 50 <= min(zetas) and max(zetas) <= 150

    def test_matches_iteration_stream(self):
        # Arrange
        config = SimulationConfig(case_source=100.0, e_benefit=0.2, e_cost=0.3, iterations=50, seed=9)

        # Act
        draws = list(iter_draws(config))
        single = sample_draw(200, 100, 0.2, 0.3, Substreams(9), index=31)

        # Assert
        assert draws[31] == single

    @pytest.mark.parametrize("e_cost", [1.0, 0.999, 1.5])
    def test_cost_error_cap(self, e_cost):
        with pytest.raises(DomainError, match="cost error >= 100%"):
            sample_draw(200, 100, 0.1, e_cost, Substreams(1), 0)


class TestRunSimulation:
    def test_zero_error_collapse(self):
        # Arrange
        config = SimulationConfig(case_source=ProjectBand.MEDIUM, e_benefit=0, e_cost=0, iterations=1000)

        # Act
        result = run_simulation(config)

        # Assert
        assert result.mean_abs_error == 0.0
        assert all(d.roi_est == result.actual_roi for d in iter_draws(config))
        assert result.draw_stats.std == 0.0

    @pytest.mark.parametrize("e", [0.05, 0.30, 0.90])
    def test_integration_oracle(self, integration_oracle, e):
        # Arrange
        config = SimulationConfig(
            case_source=100.0,
            benefit_cost_ratio=2.0,
            e_benefit=e,
            e_cost=e,
            iterations=100_000,
        )

        # Act
        result = run_simulation(config)
        expected = integration_oracle(2.0, e, e)

        # Assert
        assert result.mean_abs_error == pytest.approx(expected, rel=0.03), (
            f"Simulated δR {result.mean_abs_error} disagrees with the oracle {expected}"
        )

    def test_small_error_expectation(self, integration_oracle):
        assert integration_oracle(2.0, 0.05, 0.05) == pytest.approx(0.0667, rel=0.01)

    def test_deterministic(self):
        # Arrange
        config = SimulationConfig(case_source=ProjectBand.ANY, e_benefit=0.2, e_cost=0.4, iterations=5000, seed=123)

        # Act
        first = run_simulation(config)
        second = run_simulation(config)

        # Assert
        assert first == second, "Identical configurations must give identical results"

    @pytest.mark.parametrize("n_jobs, chunk_size", [(2, 7000), (4, 997), (-1, 12345)])
    def test_parallelism_independence(self, n_jobs, chunk_size):
        # Arrange
        config = SimulationConfig(e_benefit=0.3, e_cost=0.3, iterations=30000, seed=99)
        parallel = config.model_copy(update={"n_jobs": n_jobs, "chunk_size": chunk_size})

        # Act
        serial_result = run_simulation(config)
        parallel_result = run_simulation(parallel)

        # Assert
        assert serial_result.model_dump(exclude={"config"}) == parallel_result.model_dump(
            exclude={"config"}
        )

    def test_containment(self):
        # Arrange
        config = SimulationConfig(e_benefit=0.3, e_cost=0.3, iterations=30000)

        # Act
        result = run_simulation(config)
        roi_est = np.array([d.roi_est for d in iter_draws(config)])

        # Assert
        assert result.containment
        assert roi_est.size == 30000
        assert roi_est.min() >= result.roi_lower - 1e-12
        assert roi_est.max() <= result.roi_upper + 1e-12

    def test_size_invariance(self):
        # Arrange
        small = SimulationConfig(case_source=100.0, e_benefit=0.25, e_cost=0.35, seed=4)
        large = small.model_copy(update={"case_source": 1300.0})

        # Act
        small_result = run_simulation(small)
        large_result = run_simulation(large)

        streams = Substreams(4)
        small_draws = draw_estimates(small_result.case, 0.25, 0.35, streams, 0, 30000)
        large_draws = draw_estimates(large_result.case, 0.25, 0.35, streams, 0, 30000)

        # Assert
        assert small_result.mean_abs_error == large_result.mean_abs_error
        assert small_result.draw_stats == large_result.draw_stats
        np.testing.assert_array_equal(small_draws, large_draws)

    def test_invalid_config(self):
        with pytest.raises(ValidationError):
            SimulationConfig(e_cost=0.999)
        with pytest.raises(ValidationError):
            SimulationConfig(iterations=0)
        with pytest.raises(ValidationError, match="n_jobs"):
            SimulationConfig(n_jobs=0)


class TestCompareWithAnalytic:
    def test_reference_case(self):
        # Arrange
        config = SimulationConfig(case_source=100.0, benefit_cost_ratio=2.0, e_benefit=0.1, e_cost=0.1)

        # Act
        comparison = pr.compare_with_analytic(run_simulation(config))

        # Assert
        assert comparison.max_probable_error == pytest.approx(0.4, rel=1e-12)
        assert comparison.probable_error == pytest.approx(0.2828427, rel=1e-6)
        assert comparison.mc_mean_abs_error == pytest.approx(0.1333, rel=0.03)
        assert comparison.containment and comparison.ordering

    def test_zero_errors(self):
        # Arrange
        config = SimulationConfig(case_source=ProjectBand.LARGE, iterations=100)

        # Act
        comparison = pr.compare_with_analytic(run_simulation(config))

        # Assert
        assert comparison.max_probable_error == 0.0
        assert comparison.probable_error == 0.0
        assert comparison.mc_mean_abs_error == 0.0
        assert comparison.roi_lower == comparison.roi == comparison.roi_upper


class TestConfigFromScenario:
    def test_simple_scenario(self, simple_scenario):
        # Act
        config = config_from_scenario(simple_scenario, iterations=1000)

        # Assert
        assert config.case_source == 100.0
        assert config.benefit_cost_ratio == 2.0
        assert config.e_benefit == pytest.approx(0.1)
        assert config.e_cost == pytest.approx(0.1)
        assert config.iterations == 1000

    def test_overrides(self, simple_scenario):
        config = config_from_scenario(simple_scenario, e_benefit=0.3, e_cost=0.2)
        assert (config.e_benefit, config.e_cost) == (0.3, 0.2)
