import numpy as np
from loguru import logger

from src.application.ports.engines import EvolutionEngine
from src.domain.entities import DensityMatrix, EvolutionResult, LindbladModel, Representation
from src.domain.services.spin_core import embed_density, evolve_density, propagator

from .diagnostics import state_diagnostics


class ClosedEngine(EvolutionEngine):
    """Unitary evolution exp(-iHt) from the eigendecomposition of H"""

    def __init__(self, model: LindbladModel):
        if not model.is_closed:
            raise ValueError(f"Closed engine cannot run {model.describe()}")
        self._model = model

    @property
    def name(self) -> str:
        return "closed"

    def _in_model_space(self, rho: DensityMatrix) -> DensityMatrix:
        if self._model.representation is Representation.FULL and rho.is_dicke:
            return embed_density(rho)
        return rho

    def evolve(self, rho: DensityMatrix, t_start: float, t_stop: float) -> DensityMatrix:
        if t_stop < t_start:
            raise ValueError(f"Cannot evolve backwards from {t_start} to {t_stop}")
        rho = self._in_model_space(rho)
        if t_stop == t_start:
            return rho
        return evolve_density(rho, propagator(self._model.hamiltonian, t_stop - t_start))

    def run(self, rho0: DensityMatrix, times: np.ndarray) -> EvolutionResult:
        times = np.asarray(times, dtype=float)
        rho0 = self._in_model_space(rho0)
        states = tuple(self.evolve(rho0, times[0], t) for t in times)
        logger.info(f"Closed evolution of {self._model.describe()} at {times.size} grid times")
        return EvolutionResult(
            times=times,
            states=states,
            diagnostics=state_diagnostics(states, step_count=times.size - 1),
        )
