from dataclasses import dataclass
from functools import reduce

import numpy as np

from src.domain.entities import CollectiveOperator, OperatorLabel
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import MAX_FULL_SPACE_QUBITS

# Qubit basis: index 0 is spin up. Raising and lowering keep the factor 2 of
# sigma^(+/-) = sigma^x +/- i sigma^y.
SIGMA_PLUS = np.array([[0, 2], [0, 0]], dtype=complex)
SIGMA_MINUS = SIGMA_PLUS.T.copy()
SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)
IDENTITY_2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class SpinOperators:
    jz: CollectiveOperator
    jplus: CollectiveOperator
    jminus: CollectiveOperator


def build_spin_operators(spin: SpinQuantumNumber) -> SpinOperators:
    m = spin.m_values()
    jz = np.diag(m).astype(complex)

    # J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and index i+1 holds m+1
    ladder = np.sqrt(spin.j * (spin.j + 1) - m[:-1] * (m[:-1] + 1))
    jplus = np.diag(ladder, k=-1).astype(complex)

    return SpinOperators(
        jz=CollectiveOperator(jz, OperatorLabel.JZ, "Jz"),
        jplus=CollectiveOperator(jplus, OperatorLabel.JPLUS, "J+"),
        jminus=CollectiveOperator(jplus.conj().T, OperatorLabel.JMINUS, "J-"),
    )


def check_full_space(n_qubits: int):
    if not 1 <= n_qubits <= MAX_FULL_SPACE_QUBITS:
        raise ValueError(
            f"Full-space operators need 1 <= N <= {MAX_FULL_SPACE_QUBITS}, got N = {n_qubits}"
        )


def local_operator(single: np.ndarray, site: int, n_qubits: int) -> np.ndarray:
    """single acting on qubit `site` (0 is the leftmost tensor factor)"""
    check_full_space(n_qubits)
    if not 0 <= site < n_qubits:
        raise ValueError(f"Qubit index {site} out of range for N = {n_qubits}")

    factors = [single if k == site else IDENTITY_2 for k in range(n_qubits)]
    return reduce(np.kron, factors)


def tensor_power(single: np.ndarray, n_qubits: int) -> np.ndarray:
    check_full_space(n_qubits)
    return reduce(np.kron, [single] * n_qubits)


def collective_sum(single: np.ndarray, n_qubits: int) -> np.ndarray:
    """Sum over sites of the single-qubit operator"""
    return sum(local_operator(single, site, n_qubits) for site in range(n_qubits))


def magnetization_operator(n_qubits: int) -> np.ndarray:
    """m_z = (1/2) sum_i sigma^z_i on the product space"""
    return 0.5 * collective_sum(SIGMA_Z, n_qubits)


def permutation_operator(n_qubits: int, first: int, second: int) -> np.ndarray:
    """Product-space swap of two qubits"""
    check_full_space(n_qubits)
    dimension = 2**n_qubits
    indices = np.arange(dimension)
    shift_a = n_qubits - 1 - first
    shift_b = n_qubits - 1 - second
    bit_a = (indices >> shift_a) & 1
    bit_b = (indices >> shift_b) & 1
    swapped = indices ^ ((bit_a ^ bit_b) << shift_a) ^ ((bit_a ^ bit_b) << shift_b)

    swap = np.zeros((dimension, dimension), dtype=complex)
    swap[swapped, indices] = 1.0
    return swap
