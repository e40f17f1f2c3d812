from dependency_injector import containers, providers

from src.adapters.output_adapters.engines import EngineFactory
from src.adapters.output_adapters.services import PandasResultWriter
from src.application.services import AnalysisService, ScenarioBuilder
from src.domain.services.husimi_povm import PovmCache
from src.shared.constants import CSV_FLOAT_FORMAT


class ServiceModule(containers.DeclarativeContainer):
    """Application services module"""

    config = providers.Configuration()

    povm_cache = providers.Singleton(PovmCache)

    scenario_builder = providers.Singleton(ScenarioBuilder, povm_cache=povm_cache)

    engine_factory = providers.Singleton(
        EngineFactory, default_threads=config.run.default_threads.as_int()
    )

    analysis_service = providers.Singleton(AnalysisService)

    result_writer = providers.Singleton(PandasResultWriter, float_format=CSV_FLOAT_FORMAT)
