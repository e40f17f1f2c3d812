"""Correspondence between N qubits and the permutation-symmetric (Dicke) subspace"""

from functools import lru_cache

import numpy as np
from loguru import logger

from src.domain.entities import DensityMatrix, DickeState, Representation
from src.domain.entities.quantum_state import up_spin_counts
from src.domain.services.spin_core.coherent_states import log_binomial
from src.domain.services.spin_core.operators import check_full_space
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import Tolerances
from src.shared.exceptions import SubspaceLeakageError


@lru_cache(maxsize=None)
def embedding_matrix(n_qubits: int) -> np.ndarray:
    """Isometry E of shape (2^N, N+1): column n_up is the normalized symmetric state with n_up spins up"""
    check_full_space(n_qubits)
    counts = up_spin_counts(n_qubits)
    embedding = np.zeros((2**n_qubits, n_qubits + 1))
    embedding[np.arange(2**n_qubits), counts] = np.exp(-0.5 * log_binomial(n_qubits, counts))
    embedding.flags.writeable = False
    return embedding


def _check_qubits(spin: SpinQuantumNumber, n_qubits: int):
    if n_qubits != spin.n_qubits:
        raise ValueError(f"{spin} corresponds to N = {spin.n_qubits} qubits, got N = {n_qubits}")


def symmetric_embed(state: DickeState, n_qubits: int) -> np.ndarray:
    _check_qubits(state.spin, n_qubits)
    return embedding_matrix(n_qubits) @ state.amplitudes


def embed_density(rho: DensityMatrix) -> DensityMatrix:
    """E rho E^dagger on the product space"""
    if not rho.is_dicke:
        return rho
    embedding = embedding_matrix(rho.spin.n_qubits)
    return DensityMatrix.from_array(
        rho.spin,
        embedding @ rho.entries @ embedding.T,
        representation=Representation.FULL,
        positivity_tolerance=rho.positivity_tolerance,
        trace_tolerance=rho.trace_tolerance,
    )


def dicke_project(
    rho: DensityMatrix, tolerance: float = Tolerances.SUBSPACE_LEAKAGE
) -> tuple[DensityMatrix, float]:
    """
    Restrict a product-space density matrix to the symmetric subspace.

    :return: The Dicke-basis state and the probability weight that was
        outside the symmetric subspace.
    :raises SubspaceLeakageError: when that weight exceeds the tolerance.
    """
    if rho.is_dicke:
        return rho, 0.0

    embedding = embedding_matrix(rho.spin.n_qubits)
    projected = embedding.T @ rho.entries @ embedding
    retained = float(np.trace(projected).real)
    leakage = max(0.0, 1.0 - retained)

    if leakage > tolerance:
        raise SubspaceLeakageError(
            f"State carries weight {leakage:.3e} outside the symmetric subspace "
            f"(tolerance {tolerance:.1e})",
            leakage=leakage,
        )

    if leakage > 0:
        logger.debug(f"Projected out symmetric-subspace leakage {leakage:.3e}")

    return (
        DensityMatrix.from_array(
            rho.spin,
            projected / retained,
            positivity_tolerance=rho.positivity_tolerance,
            trace_tolerance=rho.trace_tolerance,
        ),
        leakage,
    )


def restrict_operator(full_operator: np.ndarray, n_qubits: int) -> np.ndarray:
    """E^dagger A E, the Dicke-basis block of a product-space operator"""
    embedding = embedding_matrix(n_qubits)
    return embedding.T @ full_operator @ embedding
