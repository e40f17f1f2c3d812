import pytest
from loguru import logger
from pydantic import ValidationError

from src.infrastructure.config.settings import AppSettings, LoggingSettings, RunSettings


class TestSettings:
    def test_log_level_is_upper_cased(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "debug")
        assert LoggingSettings().level == "DEBUG"

    def test_run_settings_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("OUTPUT_PATH", str(tmp_path / "out"))
        monkeypatch.setenv("SCENARIO_PATH", str(tmp_path))
        monkeypatch.setenv("DEFAULT_THREADS", "4")
        run = RunSettings()
        assert run.output_path == str(tmp_path / "out")
        assert run.scenario_path == str(tmp_path)
        assert run.default_threads == 4

    def test_missing_scenario_directory_is_logged(self, monkeypatch, tmp_path):
        missing = tmp_path / "absent"
        monkeypatch.setenv("SCENARIO_PATH", str(missing))
        messages = []
        handler = logger.add(messages.append, level="WARNING", format="{message}")
        try:
            run = RunSettings()
        finally:
            logger.remove(handler)
        assert run.scenario_path == str(missing)
        assert any(f"Scenario directory not found: {missing}" in message for message in messages)

    def test_threads_must_be_positive(self, monkeypatch):
        monkeypatch.setenv("DEFAULT_THREADS", "0")
        with pytest.raises(ValidationError):
            RunSettings()

    def test_container_config_sections(self, monkeypatch):
        monkeypatch.setenv("APP_ENV", "test")
        config = AppSettings().to_container_config()
        assert set(config) == {"logging", "run", "app"}
        assert config["app"]["env"] == "test"
        assert set(config["run"]) == {"output_path", "scenario_path", "default_threads"}
        assert set(config["logging"]) == {"level", "directory", "to_file"}
