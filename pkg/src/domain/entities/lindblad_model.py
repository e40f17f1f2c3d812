from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.domain.entities.quantum_state import (
    CollectiveOperator,
    OperatorLabel,
    Representation,
    space_dimension,
)
from src.domain.value_objects import SpinQuantumNumber
from src.shared.exceptions import InvalidStateError


class EnvironmentKind(str, Enum):
    NONE = "none"
    DEPHASING = "dephasing"
    THERMAL = "thermal"


class Coupling(str, Enum):
    """Normalisation of the all-spin flip Hamiltonian relative to the two-level precession"""

    PRECESSION = "precession"
    PRODUCT = "product"


class OperatorScheme(str, Enum):
    COLLECTIVE = "collective"
    LOCAL = "local"


@dataclass(frozen=True, eq=False)
class LindbladModel:
    """Hamiltonian plus Lindblad operators for one environment"""

    spin: SpinQuantumNumber
    hamiltonian: CollectiveOperator
    lindblad_ops: tuple[CollectiveOperator, ...]
    omega: float
    environment: EnvironmentKind = EnvironmentKind.NONE
    representation: Representation = Representation.DICKE
    coupling: Coupling = Coupling.PRECESSION
    gamma_dp: float = 0.0
    gamma_th: float = 0.0
    n_bar: float = 0.0

    def __post_init__(self):
        if self.hamiltonian.label is not OperatorLabel.HAMILTONIAN:
            raise InvalidStateError("Model Hamiltonian must carry the Hamiltonian label")

        dimension = space_dimension(self.spin, self.representation)
        if self.hamiltonian.dimension != dimension:
            raise InvalidStateError(
                f"Hamiltonian has dimension {self.hamiltonian.dimension}, expected {dimension}"
            )

        for operator in self.lindblad_ops:
            if operator.dimension != dimension:
                raise InvalidStateError(
                    f"Lindblad operator {operator.name!r} has dimension "
                    f"{operator.dimension}, expected {dimension}"
                )

        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")

        if min(self.gamma_dp, self.gamma_th, self.n_bar) < 0:
            raise ValueError("Couplings and n_bar cannot be negative")

    @property
    def dimension(self) -> int:
        return self.hamiltonian.dimension

    @property
    def is_closed(self) -> bool:
        return not self.lindblad_ops

    def dissipation_operator(self) -> np.ndarray:
        """Sum over k of L_k^dagger L_k"""
        total = np.zeros((self.dimension, self.dimension), dtype=complex)
        for operator in self.lindblad_ops:
            total += operator.dagger @ operator.entries
        return total

    def effective_hamiltonian(self) -> np.ndarray:
        """H - (i/2) sum L^dagger L, the non-Hermitian no-jump generator"""
        return self.hamiltonian.entries - 0.5j * self.dissipation_operator()

    def dissipation_norm(self) -> float:
        return float(np.linalg.norm(self.dissipation_operator(), ord=2))

    def hamiltonian_norm(self) -> float:
        return float(np.max(np.abs(np.linalg.eigvalsh(self.hamiltonian.entries))))

    def describe(self) -> str:
        couplings = {
            EnvironmentKind.NONE: "",
            EnvironmentKind.DEPHASING: f", gamma_dp={self.gamma_dp}",
            EnvironmentKind.THERMAL: f", gamma_th={self.gamma_th}, n_bar={self.n_bar}",
        }[self.environment]
        return (
            f"{self.environment.value} model on {self.spin} "
            f"({self.representation.value}, {self.coupling.value}, omega={self.omega}{couplings})"
        )
