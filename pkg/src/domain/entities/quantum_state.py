from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy import linalg

from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import MAX_FULL_SPACE_QUBITS, Tolerances
from src.shared.exceptions import InvalidStateError


def _frozen_array(values: np.ndarray, dtype=complex) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class DickeState:
    """Pure state in the Dicke basis, amplitudes ordered m = -j .. +j"""

    spin: SpinQuantumNumber
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = _frozen_array(self.amplitudes)
        if amplitudes.shape != (self.spin.dimension,):
            raise InvalidStateError(
                f"Expected {self.spin.dimension} amplitudes for {self.spin}, "
                f"got shape {amplitudes.shape}"
            )

        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > Tolerances.STATE_NORM:
            raise InvalidStateError(f"State is not normalized: |psi|^2 = {norm!r}")

        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def normalized(cls, spin: SpinQuantumNumber, amplitudes: np.ndarray) -> "DickeState":
        vector = np.asarray(amplitudes, dtype=complex)
        return cls(spin=spin, amplitudes=vector / np.linalg.norm(vector))

    @classmethod
    def basis(cls, spin: SpinQuantumNumber, m: float) -> "DickeState":
        vector = np.zeros(spin.dimension, dtype=complex)
        vector[spin.index_of(m)] = 1.0
        return cls(spin=spin, amplitudes=vector)

    @classmethod
    def north(cls, spin: SpinQuantumNumber) -> "DickeState":
        return cls.basis(spin, spin.j)

    @classmethod
    def south(cls, spin: SpinQuantumNumber) -> "DickeState":
        return cls.basis(spin, -spin.j)

    def amplitude(self, m: float) -> complex:
        return complex(self.amplitudes[self.spin.index_of(m)])

    def overlap(self, other: "DickeState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(
            spin=self.spin, entries=np.outer(self.amplitudes, self.amplitudes.conj())
        )


class Representation(str, Enum):
    DICKE = "dicke"
    FULL = "full"


@lru_cache(maxsize=None)
def up_spin_counts(n_qubits: int) -> np.ndarray:
    """Number of up spins in each product basis state; bit value 0 is spin up"""
    indices = np.arange(2**n_qubits)
    ones = np.zeros_like(indices)
    for bit in range(n_qubits):
        ones += (indices >> bit) & 1
    counts = n_qubits - ones
    counts.flags.writeable = False
    return counts


def space_dimension(spin: SpinQuantumNumber, representation: Representation) -> int:
    if representation is Representation.FULL:
        if spin.n_qubits > MAX_FULL_SPACE_QUBITS:
            raise ValueError(
                f"Full-space mode supports at most {MAX_FULL_SPACE_QUBITS} qubits, "
                f"got {spin.n_qubits}"
            )
        return 2**spin.n_qubits
    return spin.dimension


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive matrix in the Dicke basis or the full product space"""

    spin: SpinQuantumNumber
    entries: np.ndarray
    representation: Representation = Representation.DICKE
    positivity_tolerance: float = field(default=Tolerances.MIN_EIGENVALUE, repr=False)
    trace_tolerance: float = field(default=Tolerances.TRACE, repr=False)

    def __post_init__(self):
        entries = _frozen_array(self.entries)
        dimension = space_dimension(self.spin, self.representation)
        if entries.shape != (dimension, dimension):
            raise InvalidStateError(
                f"Expected a {dimension}x{dimension} matrix for {self.spin} "
                f"({self.representation.value}), got shape {entries.shape}"
            )

        asymmetry = float(np.max(np.abs(entries - entries.conj().T)))
        if asymmetry > Tolerances.HERMITIAN:
            raise InvalidStateError(f"Density matrix is not Hermitian ({asymmetry:.3e})")

        trace = complex(np.trace(entries))
        if abs(trace - 1.0) > self.trace_tolerance:
            raise InvalidStateError(f"Density matrix trace is {trace!r}, expected 1")

        min_eigenvalue = float(linalg.eigvalsh(entries)[0])
        if min_eigenvalue < self.positivity_tolerance:
            raise InvalidStateError(
                f"Density matrix is not positive: min eigenvalue {min_eigenvalue:.3e}"
            )

        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_array(
        cls,
        spin: SpinQuantumNumber,
        entries: np.ndarray,
        representation: Representation = Representation.DICKE,
        positivity_tolerance: float = Tolerances.MIN_EIGENVALUE,
        trace_tolerance: float = Tolerances.TRACE,
    ) -> "DensityMatrix":
        """Symmetrize away rounding-level anti-Hermitian parts before validation"""
        matrix = np.asarray(entries, dtype=complex)
        return cls(
            spin=spin,
            entries=(matrix + matrix.conj().T) / 2,
            representation=representation,
            positivity_tolerance=positivity_tolerance,
            trace_tolerance=trace_tolerance,
        )

    def with_entries(self, entries: np.ndarray) -> "DensityMatrix":
        """New state on the same space with the same tolerances"""
        return DensityMatrix.from_array(
            self.spin,
            entries,
            representation=self.representation,
            positivity_tolerance=self.positivity_tolerance,
            trace_tolerance=self.trace_tolerance,
        )

    @classmethod
    def from_vector(
        cls,
        spin: SpinQuantumNumber,
        vector: np.ndarray,
        representation: Representation = Representation.DICKE,
    ) -> "DensityMatrix":
        vector = np.asarray(vector, dtype=complex)
        return cls.from_array(spin, np.outer(vector, vector.conj()), representation)

    @classmethod
    def maximally_mixed(cls, spin: SpinQuantumNumber) -> "DensityMatrix":
        return cls(spin=spin, entries=np.eye(spin.dimension) / spin.dimension)

    @classmethod
    def diagonal(cls, spin: SpinQuantumNumber, populations: np.ndarray) -> "DensityMatrix":
        return cls(spin=spin, entries=np.diag(np.asarray(populations, dtype=complex)))

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def is_dicke(self) -> bool:
        return self.representation is Representation.DICKE

    def populations(self) -> np.ndarray:
        return self.entries.diagonal().real.copy()

    def magnetization_populations(self) -> np.ndarray:
        """Probability of each m_z eigenvalue, ordered m = -j .. +j"""
        diagonal = self.entries.diagonal().real
        if self.is_dicke:
            return diagonal.copy()
        counts = up_spin_counts(self.spin.n_qubits)
        return np.bincount(counts, weights=diagonal, minlength=self.spin.dimension)

    def population(self, m: float) -> float:
        return float(self.magnetization_populations()[self.spin.index_of(m)])

    def expectation(self, operator: np.ndarray) -> complex:
        return complex(np.trace(self.entries @ operator))

    def min_eigenvalue(self) -> float:
        return float(linalg.eigvalsh(self.entries)[0])

    def trace_distance(self, other: "DensityMatrix") -> float:
        eigenvalues = linalg.eigvalsh(self.entries - other.entries)
        return 0.5 * float(np.sum(np.abs(eigenvalues)))


class OperatorLabel(str, Enum):
    JZ = "Jz"
    JPLUS = "Jplus"
    JMINUS = "Jminus"
    HAMILTONIAN = "Hamiltonian"
    LINDBLAD = "Lindblad"
    UNITARY = "Unitary"
    OTHER = "Other"


@dataclass(frozen=True, eq=False)
class CollectiveOperator:
    """Dense operator on either the Dicke space or the full 2^N product space"""

    entries: np.ndarray
    label: OperatorLabel = OperatorLabel.OTHER
    name: str = field(default="")

    def __post_init__(self):
        entries = _frozen_array(self.entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidStateError(f"Operator must be square, got shape {entries.shape}")

        if self.label is OperatorLabel.HAMILTONIAN and not _is_hermitian(entries):
            raise InvalidStateError(f"Hamiltonian {self.name!r} is not Hermitian")

        if self.label is OperatorLabel.UNITARY:
            residual = float(
                np.max(np.abs(entries.conj().T @ entries - np.eye(entries.shape[0])))
            )
            if residual > Tolerances.UNITARY:
                raise InvalidStateError(
                    f"Operator {self.name!r} is not unitary (residual {residual:.3e})"
                )

        object.__setattr__(self, "entries", entries)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def dagger(self) -> np.ndarray:
        return self.entries.conj().T

    def is_hermitian(self, tolerance: float = Tolerances.HERMITIAN) -> bool:
        return _is_hermitian(self.entries, tolerance)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self.entries @ vector

    def operator_norm(self) -> float:
        return float(np.linalg.norm(self.entries, ord=2))


def _is_hermitian(entries: np.ndarray, tolerance: float = Tolerances.HERMITIAN) -> bool:
    return float(np.max(np.abs(entries - entries.conj().T))) <= tolerance
