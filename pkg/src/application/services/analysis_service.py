from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.application.dto.run_dto import AnalysisDocument
from src.application.ports.engines import EvolutionEngine
from src.application.services.scenario_builder import BuiltScenario
from src.domain.entities import (
    ContinuityReport,
    DecayFit,
    EnvironmentKind,
    EvolutionResult,
    MagnetizationHistogram,
    MRReport,
    SurvivalSeries,
)
from src.domain.services.dynamics import (
    dephasing_decay_rate,
    fit_decay_rate,
    magnetization_distribution,
)
from src.domain.services.macrorealism import (
    continuity_witness,
    log_time_pairs,
    mr_condition_check,
    multiplicativity_scan,
    slot_series_from_histograms,
    slot_series_from_partition,
    survival_function,
)
from src.domain.services.spin_core import dicke_project


@dataclass(frozen=True, eq=False)
class AnalysisOutcome:
    histograms: list[MagnetizationHistogram]
    survival: SurvivalSeries
    document: AnalysisDocument
    decay_fit: DecayFit | None = None
    mr_report: MRReport | None = None
    continuity_report: ContinuityReport | None = None


class AnalysisService:
    """Histograms, survival series and the requested reports for one evolution"""

    def analyze(
        self, built: BuiltScenario, engine: EvolutionEngine, result: EvolutionResult
    ) -> AnalysisOutcome:
        scenario = built.scenario
        analysis = scenario.analysis
        notes: list[str] = list(built.warnings)

        all_histograms = [
            magnetization_distribution(state, built.bin_edges, time=float(t))
            for t, state in zip(result.times, result.states)
        ]
        if built.snapshots:
            histograms = [all_histograms[self._index(result, t)] for t in built.snapshots]
        else:
            histograms = all_histograms

        survival = result.survival_series()

        decay_fit = None
        if analysis.decay_fit or (analysis.mr_check is not None and analysis.mr_check.pairs == "auto"):
            decay_fit = fit_decay_rate(survival)

        multiplicativity = None
        if analysis.multiplicativity:
            mismatch = multiplicativity_scan(survival_function(survival), survival.times)
            multiplicativity = {"max_mismatch": mismatch}
            logger.info(f"Multiplicativity scan: max mismatch {mismatch:.3e}")

        mr_report = None
        if analysis.mr_check is not None:
            mr_report = self._mr_check(built, engine, decay_fit)
            notes.extend(
                f"pair ({pair.t_i:g}, {pair.t_j:g}) skipped unreachable slots {', '.join(pair.skipped_slots)}"
                for pair in mr_report.pairs
                if pair.skipped_slots
            )

        continuity_report = None
        if analysis.continuity is not None:
            continuity_report = self._continuity(built, result, all_histograms)
            if not continuity_report.reliable:
                notes.append(
                    f"continuity witness unreliable: omega*dt = {continuity_report.max_step_omega:.3g}"
                )

        document = AnalysisDocument(
            scenario=scenario.name,
            engine=engine.name,
            diagnostics=result.diagnostics.to_dict(),
            decay_fit=decay_fit.to_dict() if analysis.decay_fit and decay_fit else None,
            reference_rates=self._reference_rates(built),
            multiplicativity=multiplicativity,
            mr_check=mr_report.to_dict() if mr_report else None,
            continuity=continuity_report.to_dict() if continuity_report else None,
            ensemble=self._ensemble(result),
            notes=notes,
        )
        return AnalysisOutcome(
            histograms=histograms,
            survival=survival,
            document=document,
            decay_fit=decay_fit,
            mr_report=mr_report,
            continuity_report=continuity_report,
        )

    @staticmethod
    def _index(result: EvolutionResult, t: float) -> int:
        return int(np.argmin(np.abs(result.times - t)))

    @staticmethod
    def _mr_check(built: BuiltScenario, engine: EvolutionEngine, decay_fit: DecayFit | None) -> MRReport:
        spec = built.scenario.analysis.mr_check
        if spec.pairs == "auto":
            lattice = built.toy_params.delta_t if built.toy_params is not None else None
            pairs = log_time_pairs(decay_fit.nu, spec.auto_points, lattice=lattice)
        else:
            pairs = [(float(t_i), float(t_j)) for t_i, t_j in spec.pairs]

        logger.info(f"Running macrorealism check on {len(pairs)} time pairs")
        return mr_condition_check(engine, built.rho0, built.povm, pairs, built.grid, spec.epsilon)

    @staticmethod
    def _continuity(
        built: BuiltScenario,
        result: EvolutionResult,
        histograms: list[MagnetizationHistogram],
    ) -> ContinuityReport:
        spec = built.scenario.analysis.continuity
        if spec.source == "partition":
            states = [dicke_project(state)[0] for state in result.states]
            series = slot_series_from_partition(result.times, states, built.povm)
        else:
            series = slot_series_from_histograms(histograms, built.spin)

        report = continuity_witness(series, spec.eps_mid, spec.delta_transfer, omega=built.effective_omega)
        logger.info(
            f"Continuity witness W = {report.witness:.4f} "
            f"({'violation' if report.violation else 'no violation'} at delta_transfer {spec.delta_transfer})"
        )
        return report

    @staticmethod
    def _reference_rates(built: BuiltScenario) -> dict | None:
        """Analytic decay rates the fitted rate can be compared with"""
        if built.toy_params is not None:
            return {
                "small_step_rate": built.toy_params.small_step_rate,
                "lattice_rate": built.toy_params.exact_rate,
            }

        model = built.model
        if model is not None and model.environment is EnvironmentKind.DEPHASING:
            return {"dephasing_rate": dephasing_decay_rate(built.spin, built.effective_omega, model.gamma_dp)}
        return None

    @staticmethod
    def _ensemble(result: EvolutionResult) -> dict | None:
        ensemble = result.ensemble
        if ensemble is None:
            return None
        return {
            "count": ensemble.count,
            "master_seed": ensemble.master_seed,
            "magnetization_mean": [float(v) for v in ensemble.magnetization_mean],
            "magnetization_stderr": [float(v) for v in ensemble.magnetization_stderr],
            "max_norm_drift": ensemble.max_norm_drift,
        }
