from abc import ABC, abstractmethod

from src.application.dto.run_dto import ScenarioSummaryDTO
from src.application.dto.scenario_dto import Scenario


class ScenarioRepository(ABC):
    """Source of scenario definitions, bundled or user supplied"""

    @abstractmethod
    def list_scenarios(self) -> list[ScenarioSummaryDTO]:
        """
        Catalog of the scenarios the repository knows by name.

        :return: One summary per scenario, sorted by name.
        """

    @abstractmethod
    def load(self, reference: str) -> Scenario:
        """
        Load and validate a scenario.

        :param reference: A file path or the name of a known scenario.
        :return: The parsed scenario.
        :raises ScenarioNotFoundException: when the reference matches nothing.
        :raises ScenarioParseException: when the file is not a valid document.
        :raises ScenarioValidationException: when the document breaks the
            scenario schema; carries one message per offending field.
        """
