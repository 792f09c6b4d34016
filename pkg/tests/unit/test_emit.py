import json

import pytest

import pyroi as pr
from pyroi.propagation import ValidityRow
from pyroi.simulation import ConvergenceRow, SweepRow


@pytest.fixture
def sweep_row():
    return SweepRow(e=0.05, delta_r=0.0667, ratio=2.0, iterations=30000, seed=42)


class TestEmitCsv:
    def test_sweep_row(self, sweep_row):
        # Act
        text = pr.emit([sweep_row], "csv")

        # Assert
        assert text == "e,delta_r,ratio,iterations,seed\n0.05,0.0667,2.0,30000,42\n"

    def test_validity_row(self):
        # Arrange
        row = ValidityRow(rel_error=0.2, exact=1.25, approx=1.2, relative_gap=0.04)

        # Act
        lines = pr.emit([row]).splitlines()

        # Assert
        assert lines == ["rel_error,exact,approx,relative_gap", "0.2,1.25,1.2,0.04"]

    def test_empty_sweep(self):
        # Act
        text = pr.emit([], "csv", row_type=SweepRow)

        # Assert
        assert text == "e,delta_r,ratio,iterations,seed\n", "Expected a header only"

    def test_convergence_columns(self):
        # Arrange
        row = ConvergenceRow(
            iterations=1000,
            spread=0.01,
            mean_delta_r=0.2,
            min_delta_r=0.195,
            max_delta_r=0.205,
            seeds=20,
        )

        # Act
        header = pr.emit([row]).splitlines()[0]

        # Assert
        assert header == "iterations,spread,mean_delta_r,min_delta_r,max_delta_r,seeds"

    def test_single_model_flattened(self, benefit, cost):
        # Arrange
        report = pr.error_report(benefit, cost)

        # Act
        header, values = pr.emit(report, "csv").splitlines()

        # Assert
        columns = header.split(",")
        assert "benefit_total.abs_error" in columns
        assert columns.index("roi") == 0
        assert values.split(",")[0] == "1.0"

    def test_percent(self, sweep_row):
        # Act
        line = pr.emit([sweep_row], percent=True).splitlines()[1]

        # Assert
        e, delta_r, ratio, iterations, seed = line.split(",")
        assert float(e) == pytest.approx(5.0)
        assert float(delta_r) == pytest.approx(6.67)
        assert (ratio, iterations, seed) == ("2.0", "30000", "42")

    def test_deterministic(self, sweep_row):
        assert pr.emit([sweep_row, sweep_row]) == pr.emit([sweep_row, sweep_row])


class TestEmitJson:
    def test_rows(self, sweep_row):
        # Act
        data = json.loads(pr.emit([sweep_row], "json"))

        # Assert
        assert data == [
            {"e": 0.05, "delta_r": 0.0667, "ratio": 2.0, "iterations": 30000, "seed": 42}
        ]

    def test_report_round_trips_floats(self, benefit, cost):
        # Arrange
        report = pr.error_report(benefit, cost)

        # Act
        data = json.loads(pr.emit(report, "json"))

        # Assert
        assert data["probable_error"] == report.probable_error
        assert data["roi_upper"] == report.roi_upper
        assert data["aggregation_mode"] == "sum"
        assert pr.ErrorReport.model_validate(data) == report

    def test_percent_nested(self, benefit, cost):
        # Arrange
        report = pr.error_report(benefit, cost)

        # Act
        data = json.loads(pr.emit({"report": report}, "json", percent=True))

        # Assert
        assert data["report"]["max_probable_error"] == pytest.approx(40.0)
        assert data["report"]["benefit_total"]["value"] == 200

    def test_to_pandas(self, sweep_row):
        # Act
        df = pr.to_pandas([sweep_row, sweep_row])

        # Assert
        assert list(df.columns) == ["e", "delta_r", "ratio", "iterations", "seed"]
        assert len(df) == 2
