from .closed_engine import ClosedEngine
from .engine_factory import EngineFactory
from .master_engine import MasterEngine
from .qsd_engine import QsdEngine
from .toy_engine import ToyEngine

__all__ = ["ClosedEngine", "EngineFactory", "MasterEngine", "QsdEngine", "ToyEngine"]
