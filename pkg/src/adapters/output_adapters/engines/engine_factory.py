from loguru import logger

from src.application.dto.scenario_dto import EngineKind
from src.application.ports.engines import EngineProvider, EvolutionEngine
from src.application.services.scenario_builder import BuiltScenario

from .closed_engine import ClosedEngine
from .master_engine import MasterEngine
from .qsd_engine import QsdEngine
from .toy_engine import ToyEngine


class EngineFactory(EngineProvider):
    """Creates the engine a built scenario asks for"""

    def __init__(self, default_threads: int = 1):
        self._default_threads = default_threads

    def create(
        self,
        built: BuiltScenario,
        seed: int | None = None,
        threads: int | None = None,
    ) -> EvolutionEngine:
        kind = built.scenario.engine
        logger.debug(f"Creating {kind.value} engine for scenario {built.scenario.name!r}")

        match kind:
            case EngineKind.TOY:
                return ToyEngine(built.toy_params)
            case EngineKind.CLOSED:
                return ClosedEngine(built.model)
            case EngineKind.MASTER:
                return MasterEngine(built.model)
            case EngineKind.QSD:
                trajectories = built.scenario.trajectories
                return QsdEngine(
                    built.model,
                    count=trajectories.count,
                    master_seed=trajectories.seed if seed is None else seed,
                    max_step=trajectories.max_step,
                    threads=threads or self._default_threads,
                )
            case _:
                raise ValueError(f"Unknown engine {kind!r}")
