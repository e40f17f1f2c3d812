from src.adapters.output_adapters.engines import EngineFactory
from src.application.use_cases import ListScenariosUseCase, RunScenarioUseCase, ValidateScenarioUseCase


class TestContainer:
    def test_use_cases_are_wired(self, container):
        assert isinstance(container.use_cases.run_scenario(), RunScenarioUseCase)
        assert isinstance(container.use_cases.validate_scenario(), ValidateScenarioUseCase)
        assert isinstance(container.use_cases.list_scenarios(), ListScenariosUseCase)

    def test_services_are_shared(self, container):
        assert container.services.povm_cache() is container.services.povm_cache()
        assert container.services.scenario_builder() is container.services.scenario_builder()
        assert isinstance(container.services.engine_factory(), EngineFactory)

    def test_use_cases_are_created_per_call(self, container):
        assert container.use_cases.run_scenario() is not container.use_cases.run_scenario()

    def test_bundled_catalog_is_reachable(self, container):
        names = [summary.name for summary in container.use_cases.list_scenarios().execute()]
        assert "toy_decay" in names
