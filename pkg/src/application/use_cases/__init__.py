from .list_scenarios import ListScenariosUseCase
from .run_scenario import RunScenarioUseCase
from .validate_scenario import ValidateScenarioUseCase

__all__ = [
    "ListScenariosUseCase",
    "RunScenarioUseCase",
    "ValidateScenarioUseCase",
]
