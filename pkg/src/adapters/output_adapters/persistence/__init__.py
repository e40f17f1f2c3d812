from .yaml_scenario_repository import BUNDLED_SCENARIOS, YamlScenarioRepository

__all__ = ["BUNDLED_SCENARIOS", "YamlScenarioRepository"]
