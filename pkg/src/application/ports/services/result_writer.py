from abc import ABC, abstractmethod
from pathlib import Path

from src.application.dto.run_dto import AnalysisDocument, RunRecord
from src.domain.entities import MagnetizationHistogram, SurvivalSeries


class ResultWriter(ABC):
    """Writes run outputs; every method returns the path it wrote"""

    @abstractmethod
    def write_histograms(self, path: Path, histograms: list[MagnetizationHistogram]) -> Path:
        """Long-format table with columns time, bin_lo, bin_hi, probability"""

    @abstractmethod
    def write_survival(self, path: Path, series: SurvivalSeries) -> Path:
        """Table with columns time, A"""

    @abstractmethod
    def write_analysis(self, path: Path, document: AnalysisDocument) -> Path:
        pass

    @abstractmethod
    def write_record(self, path: Path, record: RunRecord) -> Path:
        pass
