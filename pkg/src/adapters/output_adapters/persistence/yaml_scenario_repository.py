from pathlib import Path

import yaml
from loguru import logger
from pydantic import ValidationError

from src.application.dto.run_dto import ScenarioSummaryDTO
from src.application.dto.scenario_dto import Scenario
from src.application.ports.repositories import ScenarioRepository
from src.shared.exceptions import (
    ScenarioNotFoundException,
    ScenarioParseException,
    ScenarioValidationException,
)

BUNDLED_SCENARIOS = Path(__file__).parent / "scenarios"

_SUFFIXES = (".yaml", ".yml")


class YamlScenarioRepository(ScenarioRepository):
    """Scenarios stored as YAML files: the bundled catalog plus an optional extra directory"""

    def __init__(self, bundled_dir: Path = BUNDLED_SCENARIOS, extra_dir: str | Path | None = None):
        self._directories = [Path(bundled_dir)]
        if extra_dir:
            self._directories.append(Path(extra_dir))

    def list_scenarios(self) -> list[ScenarioSummaryDTO]:
        summaries = {}
        for path in self._scenario_files():
            try:
                document = self._read(path)
            except ScenarioParseException as e:
                logger.warning(f"Skipping unreadable scenario {path}: {str(e)}")
                continue

            name = str(document.get("name", path.stem))
            summaries.setdefault(
                name,
                ScenarioSummaryDTO(
                    name=name,
                    engine=str(document.get("engine", "?")),
                    description=str(document.get("description", "")).strip(),
                    path=str(path),
                ),
            )

        logger.info(f"Found {len(summaries)} scenarios in {len(self._directories)} directories")
        return sorted(summaries.values(), key=lambda summary: summary.name)

    def load(self, reference: str) -> Scenario:
        path = self._resolve(reference)
        logger.info(f"Loading scenario from {path}")
        document = self._read(path)

        try:
            return Scenario.model_validate(document)
        except ValidationError as e:
            errors = [self._format_error(error) for error in e.errors()]
            logger.error(f"Scenario {path} failed validation: {errors}")
            raise ScenarioValidationException(
                f"Scenario {path.name} has {len(errors)} invalid field(s)", errors=errors
            ) from e

    def _scenario_files(self) -> list[Path]:
        files = []
        for directory in self._directories:
            if directory.is_dir():
                files.extend(sorted(p for p in directory.iterdir() if p.suffix in _SUFFIXES))
        return files

    def _resolve(self, reference: str) -> Path:
        candidate = Path(reference)
        if candidate.is_file():
            return candidate

        for path in self._scenario_files():
            if path.stem == reference:
                return path

        raise ScenarioNotFoundException(
            f"No scenario file or bundled scenario named {reference!r}"
        )

    @staticmethod
    def _read(path: Path) -> dict:
        try:
            document = yaml.safe_load(path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            raise ScenarioParseException(f"{path.name} is not valid YAML: {str(e)}") from e
        except OSError as e:
            raise ScenarioParseException(f"Cannot read {path}: {str(e)}") from e

        if not isinstance(document, dict):
            raise ScenarioParseException(f"{path.name} must hold a mapping at the top level")
        return document

    @staticmethod
    def _format_error(error: dict) -> str:
        location = ".".join(str(part) for part in error["loc"]) or "scenario"
        return f"{location}: {error['msg']}"
