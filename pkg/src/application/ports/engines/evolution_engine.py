from abc import ABC, abstractmethod

import numpy as np

from src.domain.entities import DensityMatrix, EvolutionResult


class EvolutionEngine(ABC):
    """
    Port for the dynamics a scenario runs under.

    An engine both produces the full evolution on a time grid (run) and acts
    as the channel the macrorealism check evolves measured states through
    (evolve).
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Engine kind as written in scenario files"""

    @abstractmethod
    def evolve(self, rho: DensityMatrix, t_start: float, t_stop: float) -> DensityMatrix:
        """
        Carry a state from t_start to t_stop.

        :param rho: State at t_start.
        :param t_start: Initial time.
        :param t_stop: Final time, not earlier than t_start.
        :return: The state at t_stop.
        """

    @abstractmethod
    def run(self, rho0: DensityMatrix, times: np.ndarray) -> EvolutionResult:
        """
        Evolve rho0, given at times[0], over an ascending time grid.

        :param rho0: Initial state in the Dicke basis.
        :param times: Ascending grid; the first entry is the initial time.
        :return: States at every grid time with integrator diagnostics.
        """
