import numpy as np

from src.application.ports.engines import EvolutionEngine
from src.domain.entities import DensityMatrix, EvolutionResult, LindbladModel
from src.domain.services.dynamics import integrate_master
from src.shared.constants import RK_ATOL, RK_RTOL


class MasterEngine(EvolutionEngine):
    """Lindblad master equation on the dense density matrix"""

    def __init__(self, model: LindbladModel, rtol: float = RK_RTOL, atol: float = RK_ATOL):
        self._model = model
        self._rtol = rtol
        self._atol = atol

    @property
    def name(self) -> str:
        return "master"

    @property
    def model(self) -> LindbladModel:
        return self._model

    def evolve(self, rho: DensityMatrix, t_start: float, t_stop: float) -> DensityMatrix:
        if t_stop < t_start:
            raise ValueError(f"Cannot evolve backwards from {t_start} to {t_stop}")
        times = np.array([t_start]) if t_stop == t_start else np.array([t_start, t_stop])
        return self.run(rho, times).states[-1]

    def run(self, rho0: DensityMatrix, times: np.ndarray) -> EvolutionResult:
        return integrate_master(self._model, rho0, times, rtol=self._rtol, atol=self._atol)
