from .engine_provider import EngineProvider
from .evolution_engine import EvolutionEngine

__all__ = ["EngineProvider", "EvolutionEngine"]
