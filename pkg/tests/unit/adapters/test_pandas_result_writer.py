import json

import numpy as np
import pandas as pd
import pytest
from numpy.testing import assert_allclose

from src.adapters.output_adapters.services import PandasResultWriter
from src.application.dto.run_dto import AnalysisDocument, RunRecord
from src.domain.entities import MagnetizationHistogram, SurvivalSeries


@pytest.fixture
def writer() -> PandasResultWriter:
    return PandasResultWriter()


@pytest.fixture
def histograms() -> list[MagnetizationHistogram]:
    edges = np.array([-1.5, -0.5, 0.5, 1.5])
    return [
        MagnetizationHistogram(time=0.0, edges=edges, probabilities=np.array([0.0, 0.0, 1.0])),
        MagnetizationHistogram(time=0.5, edges=edges, probabilities=np.array([0.1, 0.2, 0.7])),
    ]


class TestPandasResultWriter:
    def test_histogram_rows(self, writer, histograms, tmp_path):
        path = writer.write_histograms(tmp_path / "nested" / "histogram.csv", histograms)
        frame = pd.read_csv(path)
        assert list(frame.columns) == ["time", "bin_lo", "bin_hi", "probability"]
        assert len(frame) == 6
        assert_allclose(frame["time"], [0.0, 0.0, 0.0, 0.5, 0.5, 0.5])
        assert_allclose(frame["probability"], [0.0, 0.0, 1.0, 0.1, 0.2, 0.7])
        assert_allclose(frame.groupby("time")["probability"].sum(), [1.0, 1.0])

    def test_survival_rows(self, writer, tmp_path):
        series = SurvivalSeries(times=np.array([0.0, 0.1, 0.2]), values=np.array([1.0, 0.9, 0.8]))
        frame = pd.read_csv(writer.write_survival(tmp_path / "survival.csv", series))
        assert list(frame.columns) == ["time", "A"]
        assert_allclose(frame["A"], [1.0, 0.9, 0.8])

    def test_floats_round_trip_exactly(self, writer, tmp_path):
        values = np.array([1.0, 1 / 3, 0.1 + 0.2])
        series = SurvivalSeries(times=np.array([0.0, 1 / 7, 2 / 7]), values=values)
        frame = pd.read_csv(writer.write_survival(tmp_path / "survival.csv", series), float_precision="round_trip")
        assert np.array_equal(frame["A"].to_numpy(), values)

    def test_unix_line_endings(self, writer, histograms, tmp_path):
        path = writer.write_histograms(tmp_path / "histogram.csv", histograms)
        assert b"\r\n" not in path.read_bytes()

    def test_json_documents(self, writer, tmp_path):
        document = AnalysisDocument(scenario="toy_small", engine="toy", diagnostics={"step_count": 3})
        record = RunRecord(
            scenario="toy_small",
            scenario_hash="abc",
            code_version="test",
            engine="toy",
            seeds={},
            threads=1,
            wall_clock_seconds=0.5,
            manifest={"survival.csv": "def"},
        )
        analysis = json.loads(writer.write_analysis(tmp_path / "analysis.json", document).read_text())
        saved = json.loads(writer.write_record(tmp_path / "run_record.json", record).read_text())

        assert analysis["diagnostics"] == {"step_count": 3}
        assert analysis["notes"] == []
        assert saved["manifest"] == {"survival.csv": "def"}
