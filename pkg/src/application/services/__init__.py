from .analysis_service import AnalysisOutcome, AnalysisService
from .scenario_builder import BuiltScenario, ScenarioBuilder

__all__ = ["AnalysisOutcome", "AnalysisService", "BuiltScenario", "ScenarioBuilder"]
