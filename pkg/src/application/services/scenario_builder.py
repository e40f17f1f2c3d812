import math
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from src.application.dto.scenario_dto import EngineKind, PartitionSpec, Scenario
from src.domain.entities import (
    DensityMatrix,
    DickeState,
    EnvironmentKind,
    LindbladModel,
    PovmSet,
    SlotPartition,
    SphereGrid,
)
from src.domain.services.dynamics import (
    build_closed_model,
    build_dephasing_model,
    build_thermal_model,
    check_bins,
    unit_width_bins,
)
from src.domain.services.husimi_povm import (
    PovmCache,
    band_partition,
    default_grid,
    hemispheres,
    make_grid,
    partition_from_rectangles,
    three_region,
    whole_sphere,
)
from src.domain.services.spin_core import effective_precession_rate, make_coherent_state
from src.domain.value_objects import SphericalAngle, SpinQuantumNumber, ToyModelParams
from src.shared.constants import CONTINUITY_MAX_STEP
from src.shared.exceptions import PartitionError, ScenarioValidationException

_ON_GRID = 1e-9


@dataclass(frozen=True, eq=False)
class BuiltScenario:
    """Domain objects for one scenario, ready to hand to an engine"""

    scenario: Scenario
    spin: SpinQuantumNumber
    initial_state: DickeState
    times: np.ndarray
    snapshots: tuple[float, ...]
    bin_edges: np.ndarray
    effective_omega: float
    model: LindbladModel | None = None
    toy_params: ToyModelParams | None = None
    partition: SlotPartition | None = None
    grid: SphereGrid | None = None
    povm: PovmSet | None = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def rho0(self) -> DensityMatrix:
        return self.initial_state.to_density_matrix()


class ScenarioBuilder:
    """Turns a parsed scenario into spins, models, grids and POVMs, collecting warnings"""

    def __init__(self, povm_cache: PovmCache):
        self._povm_cache = povm_cache

    def build(self, scenario: Scenario) -> BuiltScenario:
        warnings: list[str] = []
        system = scenario.system
        spin = SpinQuantumNumber.from_qubits(system.qubits)
        effective_omega = effective_precession_rate(spin.n_qubits, system.omega, system.coupling)

        toy_params = None
        model = None
        if scenario.engine is EngineKind.TOY:
            toy_params = ToyModelParams(
                omega=effective_omega, delta_t=scenario.toy.delta_t, n_steps=scenario.toy.n_steps
            )
            warnings.extend(toy_params.validity_warnings())
            times = np.array(toy_params.times())
        else:
            grid_spec = scenario.time_grid
            times = np.linspace(grid_spec.start, grid_spec.stop, grid_spec.points)
            model = self._build_model(scenario)

        snapshots = self._snapshots(scenario, times)
        partition, grid, povm = self._build_measurement(scenario, spin, warnings)
        self._check_analysis(scenario, times, toy_params, partition, effective_omega, warnings)

        for warning in warnings:
            logger.warning(f"Scenario {scenario.name!r}: {warning}")

        return BuiltScenario(
            scenario=scenario,
            spin=spin,
            initial_state=self._initial_state(scenario, spin),
            times=times,
            snapshots=snapshots,
            bin_edges=self._bins(scenario, spin),
            effective_omega=effective_omega,
            model=model,
            toy_params=toy_params,
            partition=partition,
            grid=grid,
            povm=povm,
            warnings=tuple(warnings),
        )

    @staticmethod
    def _initial_state(scenario: Scenario, spin: SpinQuantumNumber) -> DickeState:
        initial = scenario.system.initial_state
        if initial.kind == "north":
            return DickeState.north(spin)
        if initial.kind == "south":
            return DickeState.south(spin)
        return make_coherent_state(spin, SphericalAngle.wrapped(initial.theta, initial.phi))

    @staticmethod
    def _build_model(scenario: Scenario) -> LindbladModel:
        system, environment = scenario.system, scenario.environment
        common = {
            "n_qubits": system.qubits,
            "omega": system.omega,
            "representation": system.representation,
            "coupling": system.coupling,
        }
        match environment.kind:
            case EnvironmentKind.DEPHASING:
                return build_dephasing_model(
                    gamma_dp=environment.gamma_dp, operators=environment.operators, **common
                )
            case EnvironmentKind.THERMAL:
                return build_thermal_model(
                    gamma_th=environment.gamma_th,
                    n_bar=environment.n_bar,
                    operators=environment.operators,
                    **common,
                )
            case _:
                return build_closed_model(**common)

    @staticmethod
    def _snapshots(scenario: Scenario, times: np.ndarray) -> tuple[float, ...]:
        snapshots = []
        for snapshot in scenario.snapshots:
            nearest = times[int(np.argmin(np.abs(times - snapshot)))]
            if abs(nearest - snapshot) > _ON_GRID * max(1.0, abs(snapshot)):
                raise ScenarioValidationException(
                    f"Snapshot {snapshot} is not on the time grid",
                    errors=[f"snapshots: {snapshot} is not a grid time"],
                )
            snapshots.append(float(nearest))
        return tuple(snapshots)

    @staticmethod
    def _bins(scenario: Scenario, spin: SpinQuantumNumber) -> np.ndarray:
        if scenario.bins.edges is not None:
            return check_bins(spin, np.array(scenario.bins.edges))
        return unit_width_bins(spin)

    def _build_measurement(
        self, scenario: Scenario, spin: SpinQuantumNumber, warnings: list[str]
    ) -> tuple[SlotPartition | None, SphereGrid | None, PovmSet | None]:
        spec = scenario.partition
        if spec is None:
            return None, None, None

        partition = self._partition(spec, spin)
        if not partition.is_coarse:
            warnings.append(
                f"coarse-graining ratio dTheta*sqrt(j) = {partition.coarse_graining_ratio:.2f} "
                "is below 3; slots are not classical-like"
            )

        if spec.grid is None:
            grid = default_grid(spin, partition.theta_breaks, partition.phi_breaks)
        else:
            grid = make_grid(
                spec.grid.n_theta,
                spec.grid.n_phi,
                spin=spin,
                theta_breaks=partition.theta_breaks,
                phi_breaks=partition.phi_breaks,
            )

        return partition, grid, self._povm_cache.get(partition, spin, grid)

    @staticmethod
    def _partition(spec: PartitionSpec, spin: SpinQuantumNumber) -> SlotPartition:
        match spec.preset:
            case "whole":
                return whole_sphere(spin)
            case "hemispheres":
                return hemispheres(spin)
            case "three_region":
                return three_region(spin)
            case "bands":
                return band_partition(spin, spec.band_width)
            case _:
                slots = {
                    name: [rectangle.model_dump() for rectangle in rectangles]
                    for name, rectangles in spec.slots.items()
                }
                return partition_from_rectangles(spin, slots, spec.coarse_graining_scale)

    @staticmethod
    def _check_analysis(
        scenario: Scenario,
        times: np.ndarray,
        toy_params: ToyModelParams | None,
        partition: SlotPartition | None,
        effective_omega: float,
        warnings: list[str],
    ):
        analysis = scenario.analysis
        mr_check = analysis.mr_check
        if mr_check is not None and mr_check.pairs != "auto" and toy_params is not None:
            for t_i, t_j in mr_check.pairs:
                for t in (t_i, t_j):
                    steps = t / toy_params.delta_t
                    if not math.isclose(steps, round(steps), abs_tol=_ON_GRID):
                        raise ScenarioValidationException(
                            f"MR pair time {t} is not on the toy lattice",
                            errors=[f"analysis.mr_check.pairs: {t} is not a multiple of delta_t"],
                        )

        continuity = analysis.continuity
        if continuity is not None:
            if continuity.source == "partition":
                try:
                    partition.index_of("north")
                    partition.index_of("south")
                except PartitionError as e:
                    raise ScenarioValidationException(
                        f"Continuity needs north and south slots: {e}",
                        errors=["analysis.continuity.source: partition lacks a north or south slot"],
                    ) from e

            step_omega = float(np.max(np.diff(times))) * effective_omega
            if step_omega > CONTINUITY_MAX_STEP * (1 + _ON_GRID):
                warnings.append(
                    f"time step gives omega*dt = {step_omega:.3g} > {CONTINUITY_MAX_STEP}; "
                    "the continuity witness will be flagged unreliable"
                )

        if analysis.multiplicativity and times.size < 3:
            raise ScenarioValidationException(
                "Multiplicativity scan needs at least 3 grid times",
                errors=["analysis.multiplicativity: fewer than 3 grid times"],
            )
