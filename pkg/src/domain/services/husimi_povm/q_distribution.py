import math
from functools import lru_cache

import numpy as np

from src.domain.entities import DensityMatrix, QDistribution, SlotPartition, SphereGrid
from src.domain.services.spin_core import coherent_amplitudes, dicke_project
from src.domain.value_objects import SphericalAngle, SpinQuantumNumber
from src.shared.constants import Tolerances


@lru_cache(maxsize=32)
def coherent_table(grid: SphereGrid, two_j: int) -> np.ndarray:
    """Coherent states at every grid node, shape (nodes, 2j+1); cached per grid instance"""
    table = coherent_amplitudes(SpinQuantumNumber(two_j), grid.theta, grid.phi)
    table.flags.writeable = False
    return table


def q_values(entries: np.ndarray, spin: SpinQuantumNumber, grid: SphereGrid) -> np.ndarray:
    """(2j+1)/(4 pi) <Omega|A|Omega> at every node, for any Dicke-basis matrix A"""
    table = coherent_table(grid, spin.two_j)
    expectation = np.einsum("nm,mk,nk->n", table.conj(), entries, table)
    return (spin.dimension / (4 * math.pi)) * expectation.real


def q_distribution(rho: DensityMatrix, grid: SphereGrid) -> QDistribution:
    """Husimi Q(Omega) = (2j+1)/(4 pi) <Omega|rho|Omega> sampled on the grid"""
    if not rho.is_dicke:
        # Coherent states live in the symmetric subspace
        rho, _ = dicke_project(rho)
    return QDistribution(values=q_values(rho.entries, rho.spin, grid), grid=grid, spin=rho.spin)


def q_at(rho: DensityMatrix, angle: SphericalAngle) -> float:
    """Q at a single direction, off any grid"""
    if not rho.is_dicke:
        rho, _ = dicke_project(rho)
    amplitudes = coherent_amplitudes(rho.spin, np.array([angle.theta]), np.array([angle.phi]))[0]
    expectation = np.vdot(amplitudes, rho.entries @ amplitudes).real
    return rho.spin.dimension / (4 * math.pi) * float(expectation)


def slot_probabilities(q: QDistribution, partition: SlotPartition) -> np.ndarray:
    """w_k = integral of Q over slot k"""
    labels = partition.assign(q.grid)
    weighted = q.grid.weights * q.values
    probabilities = np.bincount(labels, weights=weighted, minlength=len(partition))

    total = float(probabilities.sum())
    if abs(total - 1.0) > Tolerances.IDENTITY_RESOLUTION:
        raise ValueError(f"Slot probabilities sum to {total!r}, expected 1")

    return np.clip(probabilities, 0.0, None)
