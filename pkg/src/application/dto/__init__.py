from .run_dto import (
    AnalysisDocument,
    RunRecord,
    RunRequestDTO,
    RunResponseDTO,
    ScenarioSummaryDTO,
    ValidationReportDTO,
)
from .scenario_dto import EngineKind, Scenario

__all__ = [
    "AnalysisDocument",
    "EngineKind",
    "RunRecord",
    "RunRequestDTO",
    "RunResponseDTO",
    "Scenario",
    "ScenarioSummaryDTO",
    "ValidationReportDTO",
]
