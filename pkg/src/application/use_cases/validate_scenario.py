from loguru import logger

from src.application.dto.run_dto import ValidationReportDTO
from src.application.ports.engines import EngineProvider
from src.application.ports.repositories import ScenarioRepository
from src.application.services.scenario_builder import ScenarioBuilder
from src.shared.exceptions import (
    DomainException,
    RepositoryException,
    ScenarioValidationException,
)


class ValidateScenarioUseCase:
    """Runs every check a scenario run performs, short of evolving anything"""

    def __init__(
        self,
        scenario_repository: ScenarioRepository,
        scenario_builder: ScenarioBuilder,
        engine_factory: EngineProvider,
    ):
        self._scenario_repository = scenario_repository
        self._scenario_builder = scenario_builder
        self._engine_factory = engine_factory

    def execute(self, reference: str) -> ValidationReportDTO:
        try:
            scenario = self._scenario_repository.load(reference)
            built = self._scenario_builder.build(scenario)
            self._engine_factory.create(built)
        except ScenarioValidationException as e:
            logger.error(f"Scenario {reference!r} is invalid: {str(e)}")
            return ValidationReportDTO.failed(reference, e.errors or [str(e)])
        except (RepositoryException, DomainException, ValueError) as e:
            logger.error(f"Scenario {reference!r} is invalid: {str(e)}")
            return ValidationReportDTO.failed(reference, [str(e)])

        logger.info(f"Scenario {scenario.name!r} is valid ({len(built.warnings)} warnings)")
        return ValidationReportDTO(scenario=scenario.name, ok=True, warnings=list(built.warnings))
