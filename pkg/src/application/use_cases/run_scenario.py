import hashlib
import time
from pathlib import Path

from loguru import logger

from src.application.dto.run_dto import RunRecord, RunRequestDTO, RunResponseDTO
from src.application.dto.scenario_dto import EngineKind, Scenario
from src.application.ports.engines import EngineProvider
from src.application.ports.repositories import ScenarioRepository
from src.application.ports.services import ResultWriter
from src.application.services.analysis_service import AnalysisOutcome, AnalysisService
from src.application.services.scenario_builder import ScenarioBuilder
from src.shared.exceptions import UseCaseException


def scenario_hash(scenario: Scenario) -> str:
    """sha256 of the canonical JSON form, so formatting changes to the file do not matter"""
    return hashlib.sha256(scenario.model_dump_json().encode("utf-8")).hexdigest()


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


class RunScenarioUseCase:
    """Use case for running a scenario end to end and writing its outputs"""

    def __init__(
        self,
        scenario_repository: ScenarioRepository,
        scenario_builder: ScenarioBuilder,
        engine_factory: EngineProvider,
        analysis_service: AnalysisService,
        result_writer: ResultWriter,
        output_path: str,
        code_version: str,
    ):
        self._scenario_repository = scenario_repository
        self._scenario_builder = scenario_builder
        self._engine_factory = engine_factory
        self._analysis_service = analysis_service
        self._result_writer = result_writer
        self._output_path = Path(output_path)
        self._code_version = code_version

    def execute(self, request: RunRequestDTO) -> RunResponseDTO:
        """Execute the use case"""
        start_time = time.time()

        scenario = self._scenario_repository.load(request.scenario)
        logger.info(f"Running scenario {scenario.name!r} with the {scenario.engine.value} engine")

        built = self._scenario_builder.build(scenario)
        engine = self._engine_factory.create(built, seed=request.seed, threads=request.threads)
        result = engine.run(built.rho0, built.times)
        outcome = self._analysis_service.analyze(built, engine, result)

        output_dir = Path(request.out_dir) if request.out_dir else self._output_path / scenario.name
        try:
            files = self._write_outputs(output_dir, scenario, outcome)
            record = RunRecord(
                scenario=scenario.name,
                scenario_hash=scenario_hash(scenario),
                code_version=self._code_version,
                engine=scenario.engine.value,
                seeds=self._seeds(scenario, request),
                threads=request.threads,
                wall_clock_seconds=round(time.time() - start_time, 3),
                manifest={path.name: file_digest(path) for path in files},
            )
            record_path = self._result_writer.write_record(output_dir / scenario.outputs.record, record)
        except OSError as e:
            logger.error(f"Failed to write outputs for {scenario.name!r}: {str(e)}")
            raise UseCaseException(f"Failed to write outputs to {output_dir}: {str(e)}") from e

        logger.info(f"Scenario {scenario.name!r} finished; outputs in {output_dir}")
        return RunResponseDTO(
            scenario=scenario.name,
            engine=scenario.engine.value,
            output_dir=str(output_dir),
            files=[str(path) for path in [*files, record_path]],
            processing_time_seconds=time.time() - start_time,
            verdicts=self._verdicts(outcome),
            warnings=list(built.warnings),
        )

    def _write_outputs(self, output_dir: Path, scenario: Scenario, outcome: AnalysisOutcome) -> list[Path]:
        outputs = scenario.outputs
        return [
            self._result_writer.write_histograms(output_dir / outputs.histogram, outcome.histograms),
            self._result_writer.write_survival(output_dir / outputs.survival, outcome.survival),
            self._result_writer.write_analysis(output_dir / outputs.analysis, outcome.document),
        ]

    @staticmethod
    def _seeds(scenario: Scenario, request: RunRequestDTO) -> dict[str, int]:
        if scenario.engine is not EngineKind.QSD:
            return {}
        seed = scenario.trajectories.seed if request.seed is None else request.seed
        return {"master_seed": seed}

    @staticmethod
    def _verdicts(outcome: AnalysisOutcome) -> dict[str, str]:
        verdicts = {}
        if outcome.decay_fit is not None:
            verdicts["decay_rate"] = f"{outcome.decay_fit.nu:.6g}"
        if outcome.mr_report is not None:
            verdicts["macrorealism"] = outcome.mr_report.verdict
        if outcome.continuity_report is not None:
            verdicts["continuity"] = "violated" if outcome.continuity_report.violation else "satisfied"
        return verdicts
