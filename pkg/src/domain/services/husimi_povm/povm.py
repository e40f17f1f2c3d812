import math

import numpy as np
from loguru import logger
from scipy import linalg

from src.domain.entities import (
    CollectiveOperator,
    DensityMatrix,
    OperatorLabel,
    PovmSet,
    SlotPartition,
    SphereGrid,
)
from src.domain.services.husimi_povm.q_distribution import coherent_table, q_values
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import Tolerances
from src.shared.exceptions import UnreachableOutcomeError


def principal_sqrt(matrix: np.ndarray) -> np.ndarray:
    """Positive square root of a Hermitian positive semidefinite matrix"""
    eigenvalues, vectors = linalg.eigh((matrix + matrix.conj().T) / 2)
    roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
    return (vectors * roots[None, :]) @ vectors.conj().T


def build_povm(partition: SlotPartition, spin: SpinQuantumNumber, grid: SphereGrid) -> PovmSet:
    """
    P_k = (2j+1)/(4 pi) sum over nodes in slot k of w_i |Omega_i><Omega_i|, and M_k = sqrt(P_k).

    :raises GridResolutionError: when sum_k P_k misses the identity by more than 1e-8.
    """
    if partition.spin != spin:
        raise ValueError(f"Partition was built for {partition.spin}, not {spin}")

    labels = partition.assign(grid)
    table = coherent_table(grid, spin.two_j)
    prefactor = spin.dimension / (4 * math.pi)

    elements, kraus = [], []
    for index, name in enumerate(partition.names):
        mask = labels == index
        rows = table[mask]
        element = prefactor * (rows.T @ (grid.weights[mask][:, None] * rows.conj()))
        element = (element + element.conj().T) / 2
        elements.append(CollectiveOperator(element, OperatorLabel.OTHER, f"P[{name}]"))
        kraus.append(CollectiveOperator(principal_sqrt(element), OperatorLabel.OTHER, f"M[{name}]"))

    povm = PovmSet(
        elements=tuple(elements),
        kraus=tuple(kraus),
        partition=partition,
        grid_signature=grid.signature,
    )
    logger.debug(
        f"Built {len(povm)}-slot POVM for {spin}, completeness residual "
        f"{povm.completeness_residual():.2e}"
    )
    return povm


def kraus_reduce(rho: DensityMatrix, povm: PovmSet, k: int) -> tuple[float, DensityMatrix]:
    """
    Measure slot k: w_k = Tr[rho P_k], rho_k = M_k rho M_k^dagger / w_k.

    :raises UnreachableOutcomeError: when w_k <= 1e-12.
    """
    if not 0 <= k < len(povm):
        raise IndexError(f"Slot index {k} out of range for a {len(povm)}-slot POVM")

    if not rho.is_dicke:
        raise ValueError("Slot measurements act on Dicke-basis states; project first")

    kraus = povm.kraus[k]
    unnormalized = kraus.entries @ rho.entries @ kraus.dagger
    probability = float(np.trace(unnormalized).real)

    if probability <= Tolerances.OUTCOME_PROBABILITY:
        raise UnreachableOutcomeError(
            f"Outcome {povm.partition.names[k]!r} has probability {probability:.3e}",
            slot=k,
            probability=probability,
        )

    return probability, rho.with_entries(unnormalized / probability)


def measured_mixture(rho: DensityMatrix, povm: PovmSet) -> list[tuple[int, float, DensityMatrix]]:
    """All reachable (k, w_k, rho_k); unreachable outcomes are left out"""
    outcomes = []
    for k in range(len(povm)):
        try:
            probability, reduced = kraus_reduce(rho, povm, k)
        except UnreachableOutcomeError as e:
            logger.debug(f"Skipping slot {povm.partition.names[k]!r}: {e}")
            continue
        outcomes.append((k, probability, reduced))
    return outcomes


def mixture_deviation(
    rho: DensityMatrix,
    povm: PovmSet,
    grid: SphereGrid,
    exclude_border: float = 0.0,
) -> float:
    """
    Integral of |Q - sum_k w_k Q_k| over the sphere.

    Nodes closer than exclude_border (radians) to a slot border are left
    out of the integral.
    """
    spin = rho.spin
    mixture = np.zeros(len(grid))
    for _, probability, reduced in measured_mixture(rho, povm):
        mixture += probability * q_values(reduced.entries, spin, grid)

    difference = np.abs(q_values(rho.entries, spin, grid) - mixture)
    if exclude_border > 0:
        difference = np.where(
            povm.partition.border_distance(grid) < exclude_border, 0.0, difference
        )
    return grid.integrate(difference)
