from dependency_injector import containers, providers

from src import __version__
from src.application.use_cases import (
    ListScenariosUseCase,
    RunScenarioUseCase,
    ValidateScenarioUseCase,
)


class UseCaseModule(containers.DeclarativeContainer):
    """Use cases module"""

    config = providers.Configuration()
    repositories = providers.DependenciesContainer()
    services = providers.DependenciesContainer()

    run_scenario = providers.Factory(
        RunScenarioUseCase,
        scenario_repository=repositories.scenario_repository,
        scenario_builder=services.scenario_builder,
        engine_factory=services.engine_factory,
        analysis_service=services.analysis_service,
        result_writer=services.result_writer,
        output_path=config.run.output_path,
        code_version=__version__,
    )

    validate_scenario = providers.Factory(
        ValidateScenarioUseCase,
        scenario_repository=repositories.scenario_repository,
        scenario_builder=services.scenario_builder,
        engine_factory=services.engine_factory,
    )

    list_scenarios = providers.Factory(
        ListScenariosUseCase, scenario_repository=repositories.scenario_repository
    )
