from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger

from src.application.dto.run_dto import AnalysisDocument, RunRecord
from src.application.ports.services import ResultWriter
from src.domain.entities import MagnetizationHistogram, SurvivalSeries
from src.shared.constants import CSV_FLOAT_FORMAT, CsvColumns


class PandasResultWriter(ResultWriter):
    """CSV through pandas with a fixed column order, JSON through pydantic"""

    def __init__(self, float_format: str = CSV_FLOAT_FORMAT):
        self._float_format = float_format

    def write_histograms(self, path: Path, histograms: list[MagnetizationHistogram]) -> Path:
        frame = pd.concat(
            [
                pd.DataFrame(
                    {
                        CsvColumns.TIME: np.full(histogram.probabilities.size, histogram.time),
                        CsvColumns.BIN_LO: histogram.bin_lo,
                        CsvColumns.BIN_HI: histogram.bin_hi,
                        CsvColumns.PROBABILITY: histogram.probabilities,
                    }
                )
                for histogram in histograms
            ],
            ignore_index=True,
        )
        return self._write_csv(path, frame[list(CsvColumns.HISTOGRAM)])

    def write_survival(self, path: Path, series: SurvivalSeries) -> Path:
        frame = pd.DataFrame({CsvColumns.TIME: series.times, CsvColumns.SURVIVAL: series.values})
        return self._write_csv(path, frame[list(CsvColumns.SURVIVAL_SERIES)])

    def write_analysis(self, path: Path, document: AnalysisDocument) -> Path:
        return self._write_text(path, document.model_dump_json(indent=2))

    def write_record(self, path: Path, record: RunRecord) -> Path:
        return self._write_text(path, record.model_dump_json(indent=2))

    def _write_csv(self, path: Path, frame: pd.DataFrame) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=self._float_format, lineterminator="\n")
        logger.info(f"Wrote {len(frame)} rows to {path}")
        return path

    @staticmethod
    def _write_text(path: Path, text: str) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote {path}")
        return path
