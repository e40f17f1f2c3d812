from .scenario_repository import ScenarioRepository

__all__ = ["ScenarioRepository"]
