from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

from src.application.ports.engines.evolution_engine import EvolutionEngine

if TYPE_CHECKING:
    from src.application.services.scenario_builder import BuiltScenario


class EngineProvider(ABC):
    """Port for choosing and configuring the engine of a built scenario"""

    @abstractmethod
    def create(
        self,
        built: "BuiltScenario",
        seed: int | None = None,
        threads: int | None = None,
    ) -> EvolutionEngine:
        """
        :param built: Scenario with its model or toy parameters resolved.
        :param seed: Replaces the scenario's trajectory master seed when given.
        :param threads: Worker threads for trajectory ensembles.
        :return: An engine ready to run.
        """
