import numpy as np
from scipy import linalg

from src.application.ports.engines import EvolutionEngine
from src.domain.entities import DensityMatrix, DickeState, EvolutionResult, LindbladModel
from src.domain.services.dynamics import ensemble_average, qsd_step_size
from src.domain.services.spin_core import dicke_project
from src.shared.constants import Tolerances

from .diagnostics import state_diagnostics


class QsdEngine(EvolutionEngine):
    """Ensemble of quantum-state-diffusion trajectories started from a pure state"""

    def __init__(
        self,
        model: LindbladModel,
        count: int,
        master_seed: int,
        max_step: float | None = None,
        threads: int = 1,
    ):
        self._model = model
        self._count = count
        self._master_seed = master_seed
        self._max_step = max_step
        self._threads = threads

    @property
    def name(self) -> str:
        return "qsd"

    @property
    def master_seed(self) -> int:
        return self._master_seed

    def evolve(self, rho: DensityMatrix, t_start: float, t_stop: float) -> DensityMatrix:
        if t_stop < t_start:
            raise ValueError(f"Cannot evolve backwards from {t_start} to {t_stop}")
        if t_stop == t_start:
            return rho
        return self.run(rho, np.array([t_start, t_stop])).states[-1]

    def run(self, rho0: DensityMatrix, times: np.ndarray) -> EvolutionResult:
        times = np.asarray(times, dtype=float)
        ensemble = ensemble_average(
            self._model,
            self._pure_state(rho0),
            times,
            count=self._count,
            master_seed=self._master_seed,
            max_step=self._max_step,
            threads=self._threads,
        )
        step = qsd_step_size(self._model, self._max_step)
        span = times[-1] - times[0]
        diagnostics = state_diagnostics(
            ensemble.states,
            step_count=int(np.ceil(span / step - 1e-9)) if span > 0 else 0,
            step_size=step,
            max_norm_drift=ensemble.max_norm_drift,
        )
        return EvolutionResult(times=times, states=ensemble.states, diagnostics=diagnostics, ensemble=ensemble)

    @staticmethod
    def _pure_state(rho: DensityMatrix) -> DickeState:
        """The state vector of a pure Dicke-basis density matrix"""
        rho, _ = dicke_project(rho)
        eigenvalues, vectors = linalg.eigh(rho.entries)
        if abs(eigenvalues[-1] - 1.0) > Tolerances.TRACE:
            raise ValueError(
                f"Trajectories unravel pure states only; largest eigenvalue is {eigenvalues[-1]:.6g}"
            )
        return DickeState.normalized(rho.spin, vectors[:, -1])
