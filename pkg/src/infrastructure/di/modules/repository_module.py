from dependency_injector import containers, providers

from src.adapters.output_adapters.persistence import YamlScenarioRepository


class RepositoryModule(containers.DeclarativeContainer):
    """Repository implementations module"""

    config = providers.Configuration()

    # Bundled catalog plus SCENARIO_PATH
    scenario_repository = providers.Singleton(
        YamlScenarioRepository, extra_dir=config.run.scenario_path
    )
