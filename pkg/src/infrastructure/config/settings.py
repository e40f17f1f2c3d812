from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from loguru import logger
from pydantic import ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings

from src.shared.constants import OUTPUT_PATH

load_dotenv()


class LoggingSettings(BaseSettings):
    """Log sinks"""

    level: str = Field("INFO", alias="LOG_LEVEL")
    directory: str = Field("logs", alias="LOG_DIR")
    to_file: bool = Field(False, alias="LOG_TO_FILE")

    model_config = ConfigDict(populate_by_name=True, extra="ignore")

    @field_validator("level")
    def normalize_level(cls, v):
        return v.upper()


class RunSettings(BaseSettings):
    """Where scenarios come from and where results go"""

    output_path: str = Field(OUTPUT_PATH, alias="OUTPUT_PATH")
    scenario_path: Optional[str] = Field(None, alias="SCENARIO_PATH")
    default_threads: int = Field(1, alias="DEFAULT_THREADS", ge=1)

    model_config = ConfigDict(populate_by_name=True, extra="ignore")

    @field_validator("scenario_path")
    def validate_scenario_path(cls, v):
        if v and not Path(v).is_dir():
            logger.warning(f"Scenario directory not found: {v}")
        return v


class AppSettings(BaseSettings):
    """Application settings"""

    env: str = Field("development", alias="APP_ENV")
    name: str = Field("macroreal-sim", alias="APP_NAME")

    # Cached instances
    _logging: Optional[LoggingSettings] = None
    _run: Optional[RunSettings] = None

    model_config = ConfigDict(
        populate_by_name=True,
        extra="ignore",
    )

    @property
    def logging(self) -> LoggingSettings:
        if self._logging is None:
            self._logging = LoggingSettings()
        return self._logging

    @property
    def run(self) -> RunSettings:
        if self._run is None:
            self._run = RunSettings()
        return self._run

    def to_container_config(self) -> dict:
        """Convert all settings to container config format"""

        return {
            "logging": self.logging.model_dump(),
            "run": self.run.model_dump(),
            "app": {
                "env": self.env,
                "name": self.name,
            },
        }


# Global settings instance
settings = AppSettings()
