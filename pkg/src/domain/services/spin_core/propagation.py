import numpy as np
from scipy import linalg

from src.domain.entities import CollectiveOperator, DensityMatrix, DickeState, OperatorLabel
from src.shared.exceptions import InvalidStateError


def propagator(hamiltonian: CollectiveOperator, t: float) -> CollectiveOperator:
    """U_t = exp(-i H t) from the eigendecomposition of H"""
    if not hamiltonian.is_hermitian():
        raise InvalidStateError(f"Cannot propagate non-Hermitian operator {hamiltonian.name!r}")

    energies, vectors = linalg.eigh(hamiltonian.entries)
    unitary = (vectors * np.exp(-1j * energies * t)[None, :]) @ vectors.conj().T
    return CollectiveOperator(unitary, OperatorLabel.UNITARY, f"U({t:g})")


def closed_form_propagator(spin, omega: float, t: float) -> np.ndarray:
    """cos(omega t) on the extremal diagonal, +/- sin(omega t) off it, identity elsewhere"""
    unitary = np.eye(spin.dimension, dtype=complex)
    north, south = spin.north_index, spin.south_index
    cosine, sine = np.cos(omega * t), np.sin(omega * t)
    unitary[north, north] = cosine
    unitary[south, south] = cosine
    unitary[south, north] = sine
    unitary[north, south] = -sine
    return unitary


def evolve_state(state: DickeState, unitary: CollectiveOperator) -> DickeState:
    return DickeState.normalized(state.spin, unitary.apply(state.amplitudes))


def evolve_density(rho: DensityMatrix, unitary: CollectiveOperator) -> DensityMatrix:
    return rho.with_entries(unitary.entries @ rho.entries @ unitary.dagger)
