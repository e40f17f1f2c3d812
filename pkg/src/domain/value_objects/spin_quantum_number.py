from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.shared.constants import MAX_DICKE_QUBITS


@dataclass(frozen=True)
class SpinQuantumNumber:
    """Value object for a collective spin j, stored as the integer 2j"""

    two_j: int

    def __post_init__(self):
        if isinstance(self.two_j, bool) or not isinstance(self.two_j, (int, np.integer)):
            raise ValueError(f"2j must be an integer, got {self.two_j!r}")

        if self.two_j < 1:
            raise ValueError(f"Spin must satisfy j >= 1/2, got 2j = {self.two_j}")

        if self.two_j > MAX_DICKE_QUBITS:
            raise ValueError(f"Spin j = {self.two_j / 2} exceeds j = 10")

    @classmethod
    def from_j(cls, j: float) -> "SpinQuantumNumber":
        two_j = Fraction(j).limit_denominator(2) * 2
        if two_j.denominator != 1 or abs(float(two_j) - 2 * j) > 1e-12:
            raise ValueError(f"j must be a half-integer, got {j}")
        return cls(int(two_j))

    @classmethod
    def from_qubits(cls, n_qubits: int) -> "SpinQuantumNumber":
        return cls(int(n_qubits))

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def dimension(self) -> int:
        return self.two_j + 1

    @property
    def n_qubits(self) -> int:
        return self.two_j

    def m_values(self) -> np.ndarray:
        """J_z eigenvalues in basis order, m = -j .. +j"""
        return np.arange(self.dimension) - self.j

    def index_of(self, m: float) -> int:
        index = int(round(m + self.j))
        if index < 0 or index >= self.dimension or abs(index - self.j - m) > 1e-9:
            raise ValueError(f"m = {m} is not a valid projection for j = {self.j}")
        return index

    @property
    def north_index(self) -> int:
        return self.dimension - 1

    @property
    def south_index(self) -> int:
        return 0

    def __str__(self) -> str:
        return f"j={Fraction(self.two_j, 2)}"
