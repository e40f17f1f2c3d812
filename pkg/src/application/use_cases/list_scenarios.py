from loguru import logger

from src.application.dto.run_dto import ScenarioSummaryDTO
from src.application.ports.repositories import ScenarioRepository


class ListScenariosUseCase:
    """Catalog of the scenarios the repository can load by name"""

    def __init__(self, scenario_repository: ScenarioRepository):
        self._scenario_repository = scenario_repository

    def execute(self) -> list[ScenarioSummaryDTO]:
        scenarios = self._scenario_repository.list_scenarios()
        logger.debug(f"Listing {len(scenarios)} scenarios")
        return scenarios
