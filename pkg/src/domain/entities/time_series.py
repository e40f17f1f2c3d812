from dataclasses import dataclass, field

import numpy as np

from src.domain.entities.quantum_state import DensityMatrix, _frozen_array
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import Tolerances


def _ascending(times: np.ndarray, what: str) -> np.ndarray:
    times = _frozen_array(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError(f"{what} needs a non-empty one-dimensional time axis")

    if np.any(np.diff(times) <= 0):
        raise ValueError(f"{what} times must be strictly ascending")
    return times


@dataclass(frozen=True, eq=False)
class SurvivalSeries:
    """Probability A(t) of finding the spin along north"""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        times = _ascending(self.times, "Survival series")
        values = np.asarray(self.values, dtype=float)
        if values.shape != times.shape:
            raise ValueError("Survival values must align with the time axis")

        slack = Tolerances.ROW_SUM
        if np.any(values < -slack) or np.any(values > 1 + slack):
            raise ValueError("Survival probabilities must lie in [0, 1]")

        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", _frozen_array(np.clip(values, 0.0, 1.0), dtype=float))

    def __len__(self) -> int:
        return self.times.shape[0]

    def contrast(self) -> np.ndarray:
        """a(t) = 2 A(t) - 1"""
        return 2 * self.values - 1


@dataclass(frozen=True, eq=False)
class SlotTimeSeries:
    """Occupation probabilities of K slots over time; north and south mark the extremal slots"""

    times: np.ndarray
    labels: tuple[str, ...]
    probabilities: np.ndarray
    north: int
    south: int

    def __post_init__(self):
        times = _ascending(self.times, "Slot series")
        probabilities = np.asarray(self.probabilities, dtype=float)
        if probabilities.shape != (times.shape[0], len(self.labels)):
            raise ValueError(
                f"Expected a {times.shape[0]}x{len(self.labels)} probability table, "
                f"got {probabilities.shape}"
            )

        if self.north == self.south or not (
            0 <= self.north < len(self.labels) and 0 <= self.south < len(self.labels)
        ):
            raise ValueError("North and south must be two distinct slots")

        row_error = float(np.max(np.abs(probabilities.sum(axis=1) - 1.0)))
        if row_error > Tolerances.ROW_SUM:
            raise ValueError(f"Slot probabilities do not sum to 1 (off by {row_error:.3e})")

        object.__setattr__(self, "times", times)
        object.__setattr__(self, "probabilities", _frozen_array(probabilities, dtype=float))

    @property
    def middle(self) -> list[int]:
        return [k for k in range(len(self.labels)) if k not in (self.north, self.south)]

    def north_probability(self) -> np.ndarray:
        return self.probabilities[:, self.north]

    def south_probability(self) -> np.ndarray:
        return self.probabilities[:, self.south]

    def middle_probability(self) -> np.ndarray:
        return self.probabilities[:, self.middle].sum(axis=1)


@dataclass(frozen=True, eq=False)
class MagnetizationHistogram:
    """Probability that m_z falls in each bin [lo, hi)"""

    time: float
    edges: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self):
        edges = _frozen_array(self.edges, dtype=float)
        probabilities = np.asarray(self.probabilities, dtype=float)
        if edges.ndim != 1 or probabilities.shape != (edges.shape[0] - 1,):
            raise ValueError("Histogram needs len(edges) - 1 probabilities")

        if np.any(np.diff(edges) <= 0):
            raise ValueError("Bin edges must be strictly ascending")

        if float(probabilities.min()) < Tolerances.MIN_EIGENVALUE:
            raise ValueError(f"Negative bin probability {probabilities.min():.3e}")

        probabilities = np.clip(probabilities, 0.0, None)
        total = float(probabilities.sum())
        if abs(total - 1.0) > Tolerances.TRACE:
            raise ValueError(f"Histogram sums to {total!r}, expected 1")

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "probabilities", _frozen_array(probabilities, dtype=float))

    @property
    def bin_lo(self) -> np.ndarray:
        return self.edges[:-1]

    @property
    def bin_hi(self) -> np.ndarray:
        return self.edges[1:]

    def bin_of(self, m: float) -> int:
        index = int(np.searchsorted(self.edges, m, side="right")) - 1
        return min(max(index, 0), self.probabilities.shape[0] - 1)


@dataclass(frozen=True)
class EvolutionDiagnostics:
    max_trace_drift: float = 0.0
    max_hermiticity_error: float = 0.0
    min_eigenvalue: float = 0.0
    step_count: int = 0
    step_size: float = 0.0
    max_norm_drift: float = 0.0

    def to_dict(self) -> dict:
        return {
            "max_trace_drift": self.max_trace_drift,
            "max_hermiticity_error": self.max_hermiticity_error,
            "min_eigenvalue": self.min_eigenvalue,
            "step_count": self.step_count,
            "step_size": self.step_size,
            "max_norm_drift": self.max_norm_drift,
        }


@dataclass(frozen=True, eq=False)
class TrajectoryEnsemble:
    """Average over M quantum-state-diffusion trajectories, with per-time standard errors"""

    count: int
    master_seed: int
    times: np.ndarray
    states: tuple[DensityMatrix, ...]
    magnetization_mean: np.ndarray
    magnetization_stderr: np.ndarray
    population_stderr: np.ndarray
    max_norm_drift: float = 0.0

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"Ensemble needs at least one trajectory, got {self.count}")

        times = _ascending(self.times, "Ensemble")
        if len(self.states) != times.shape[0]:
            raise ValueError("Ensemble states must align with the time axis")

        object.__setattr__(self, "times", times)
        object.__setattr__(self, "magnetization_mean", _frozen_array(self.magnetization_mean, float))
        object.__setattr__(
            self, "magnetization_stderr", _frozen_array(self.magnetization_stderr, float)
        )
        object.__setattr__(self, "population_stderr", _frozen_array(self.population_stderr, float))


@dataclass(frozen=True, eq=False)
class EvolutionResult:
    """States rho(t) on a time grid plus integrator diagnostics"""

    times: np.ndarray
    states: tuple[DensityMatrix, ...]
    diagnostics: EvolutionDiagnostics = field(default_factory=EvolutionDiagnostics)
    ensemble: TrajectoryEnsemble | None = None

    def __post_init__(self):
        times = _ascending(self.times, "Evolution result")
        if len(self.states) != times.shape[0]:
            raise ValueError(
                f"Got {len(self.states)} states for {times.shape[0]} grid times"
            )
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", tuple(self.states))

    def __len__(self) -> int:
        return len(self.states)

    @property
    def spin(self) -> SpinQuantumNumber:
        return self.states[0].spin

    def state_at(self, time: float) -> DensityMatrix:
        index = int(np.argmin(np.abs(self.times - time)))
        if abs(self.times[index] - time) > 1e-9 * max(1.0, abs(time)):
            raise ValueError(f"Time {time} is not on the evolution grid")
        return self.states[index]

    def magnetization_populations(self) -> np.ndarray:
        """(T, 2j+1) table of m_z populations"""
        return np.array([state.magnetization_populations() for state in self.states])

    def survival_series(self) -> SurvivalSeries:
        populations = self.magnetization_populations()
        return SurvivalSeries(times=self.times, values=populations[:, self.spin.north_index])
