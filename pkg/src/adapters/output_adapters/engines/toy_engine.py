import numpy as np
from loguru import logger

from src.application.ports.engines import EvolutionEngine
from src.domain.entities import DensityMatrix, EvolutionResult
from src.domain.services.dynamics import lattice_steps, toy_evolve
from src.domain.value_objects import ToyModelParams

from .diagnostics import state_diagnostics


class ToyEngine(EvolutionEngine):
    """Stepwise dephasing; every time must sit on the delta_t lattice"""

    def __init__(self, params: ToyModelParams):
        self._params = params

    @property
    def name(self) -> str:
        return "toy"

    def evolve(self, rho: DensityMatrix, t_start: float, t_stop: float) -> DensityMatrix:
        steps = lattice_steps(self._params, t_start, t_stop)
        return toy_evolve(rho, self._params, steps)[-1]

    def run(self, rho0: DensityMatrix, times: np.ndarray) -> EvolutionResult:
        times = np.asarray(times, dtype=float)
        for warning in self._params.validity_warnings():
            logger.warning(warning)

        states = [rho0]
        total_steps = 0
        for t_prev, t_next in zip(times[:-1], times[1:]):
            steps = lattice_steps(self._params, t_prev, t_next)
            states.append(toy_evolve(states[-1], self._params, steps)[-1])
            total_steps += steps

        logger.info(
            f"Toy evolution: {total_steps} steps of delta_t = {self._params.delta_t:g} "
            f"(omega*delta_t = {self._params.phase:.4g})"
        )
        return EvolutionResult(
            times=times,
            states=tuple(states),
            diagnostics=state_diagnostics(states, step_count=total_steps, step_size=self._params.delta_t),
        )
