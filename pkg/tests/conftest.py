import copy

import pytest

from src.adapters.output_adapters.persistence import YamlScenarioRepository
from src.application.dto.scenario_dto import Scenario
from src.application.services import AnalysisService, ScenarioBuilder
from src.domain.services.husimi_povm import PovmCache
from src.domain.value_objects import SpinQuantumNumber
from src.infrastructure.di import Container

TOY_SCENARIO = {
    "name": "toy_small",
    "engine": "toy",
    "system": {"n_qubits": 4, "omega": 1.0},
    "toy": {"delta_t": 0.2, "n_steps": 30, "snapshots": [0.0, 2.0]},
    "analysis": {"decay_fit": True},
}

CLOSED_SCENARIO = {
    "name": "closed_small",
    "engine": "closed",
    "system": {"spin": 1, "omega": 1.0},
    "time_grid": {"start": 0.0, "stop": 3.0, "points": 31},
}


@pytest.fixture
def spin_one() -> SpinQuantumNumber:
    return SpinQuantumNumber(2)


@pytest.fixture
def spin_five() -> SpinQuantumNumber:
    return SpinQuantumNumber(10)


@pytest.fixture
def spin_ten() -> SpinQuantumNumber:
    return SpinQuantumNumber(20)


@pytest.fixture
def scenario_factory():
    """Build a Scenario from one of the base documents with section overrides"""

    def make(base: dict = TOY_SCENARIO, **sections) -> Scenario:
        document = copy.deepcopy(base)
        for key, value in sections.items():
            if value is None:
                document.pop(key, None)
            else:
                document[key] = value
        return Scenario.model_validate(document)

    return make


@pytest.fixture
def toy_document() -> dict:
    return copy.deepcopy(TOY_SCENARIO)


@pytest.fixture
def closed_document() -> dict:
    return copy.deepcopy(CLOSED_SCENARIO)


@pytest.fixture
def povm_cache() -> PovmCache:
    return PovmCache()


@pytest.fixture
def scenario_builder(povm_cache) -> ScenarioBuilder:
    return ScenarioBuilder(povm_cache)


@pytest.fixture
def analysis_service() -> AnalysisService:
    return AnalysisService()


@pytest.fixture
def bundled_repository() -> YamlScenarioRepository:
    return YamlScenarioRepository()


@pytest.fixture
def container(tmp_path) -> Container:
    """DI container writing under a temporary OUTPUT_PATH"""
    container = Container()
    container.config.from_dict(
        {
            "logging": {"level": "INFO", "directory": str(tmp_path / "logs"), "to_file": False},
            "run": {
                "output_path": str(tmp_path / "output"),
                "scenario_path": None,
                "default_threads": 1,
            },
            "app": {"env": "test", "name": "macroreal-sim"},
        }
    )
    return container
