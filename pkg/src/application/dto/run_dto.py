from dataclasses import dataclass, field
from typing import Optional

from pydantic import BaseModel, ConfigDict


@dataclass
class RunRequestDTO:
    """DTO for a scenario run request"""

    scenario: str
    out_dir: Optional[str] = None
    seed: Optional[int] = None
    threads: int = 1

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")

        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass
class RunResponseDTO:
    """DTO for a finished scenario run"""

    scenario: str
    engine: str
    output_dir: str
    files: list[str]
    processing_time_seconds: float
    verdicts: dict[str, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.processing_time_seconds = round(self.processing_time_seconds, 2)


@dataclass
class ValidationReportDTO:
    """Outcome of validating a scenario without running it"""

    scenario: str
    ok: bool
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @classmethod
    def failed(cls, scenario: str, errors: list[str]) -> "ValidationReportDTO":
        return cls(scenario=scenario, ok=False, errors=errors)


@dataclass(frozen=True)
class ScenarioSummaryDTO:
    name: str
    engine: str
    description: str
    path: str


class RunRecord(BaseModel):
    """
    Provenance of one run. The manifest maps every output file to its
    sha256 so reruns can be compared without diffing the files.
    """

    model_config = ConfigDict(frozen=True)

    scenario: str
    scenario_hash: str
    code_version: str
    engine: str
    seeds: dict[str, int]
    threads: int
    wall_clock_seconds: float
    manifest: dict[str, str]


class AnalysisDocument(BaseModel):
    """Analysis JSON written next to the CSV outputs"""

    model_config = ConfigDict(frozen=True)

    scenario: str
    engine: str
    diagnostics: dict
    decay_fit: Optional[dict] = None
    reference_rates: Optional[dict] = None
    multiplicativity: Optional[dict] = None
    mr_check: Optional[dict] = None
    continuity: Optional[dict] = None
    ensemble: Optional[dict] = None
    notes: list[str] = []
