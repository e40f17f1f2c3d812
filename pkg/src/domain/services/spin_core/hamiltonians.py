import numpy as np
from loguru import logger

from src.domain.entities import CollectiveOperator, Coupling, OperatorLabel
from src.domain.services.spin_core.operators import SIGMA_MINUS, SIGMA_PLUS, tensor_power
from src.domain.value_objects import SpinQuantumNumber


def effective_precession_rate(n_qubits: int, omega: float, coupling: Coupling) -> float:
    """
    Precession rate seen by the two-level block {|+j>, |-j>}.

    The all-spin flip Hamiltonian restricted to the symmetric subspace is
    2^(N-1) times the two-level precession Hamiltonian, so the product
    coupling precesses 2^(N-1) times faster than omega.
    """
    if coupling is Coupling.PRODUCT:
        return 2 ** (n_qubits - 1) * omega
    return omega


def build_nonclassical_hamiltonian(spin: SpinQuantumNumber, omega: float) -> CollectiveOperator:
    """H = i omega (|-j><+j| - |+j><-j|), zero outside the two extremal levels"""
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")

    hamiltonian = np.zeros((spin.dimension, spin.dimension), dtype=complex)
    hamiltonian[spin.south_index, spin.north_index] = 1j * omega
    hamiltonian[spin.north_index, spin.south_index] = -1j * omega
    return CollectiveOperator(hamiltonian, OperatorLabel.HAMILTONIAN, "precession")


def build_product_hamiltonian(
    n_qubits: int, omega: float, coupling: Coupling = Coupling.PRODUCT
) -> CollectiveOperator:
    """
    All-spin flip Hamiltonian on the 2^N product space.

    H = -i (omega/2) (sigma+_1 ... sigma+_N - sigma-_1 ... sigma-_N) with the
    factor-2 ladder operators. The -i makes the operator Hermitian; with
    the precession coupling the result is divided by 2^(N-1) so that it
    matches the two-level precession at rate omega.
    """
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")

    raising = tensor_power(SIGMA_PLUS, n_qubits)
    lowering = tensor_power(SIGMA_MINUS, n_qubits)
    hamiltonian = -0.5j * omega * (raising - lowering)

    if coupling is Coupling.PRECESSION:
        hamiltonian /= 2 ** (n_qubits - 1)

    logger.debug(
        f"Built product Hamiltonian for N={n_qubits} ({coupling.value} coupling, "
        f"dimension {hamiltonian.shape[0]})"
    )
    return CollectiveOperator(hamiltonian, OperatorLabel.HAMILTONIAN, f"flip-{coupling.value}")


def build_dicke_hamiltonian(
    spin: SpinQuantumNumber, omega: float, coupling: Coupling = Coupling.PRECESSION
) -> CollectiveOperator:
    """Symmetric-subspace counterpart of build_product_hamiltonian"""
    rate = effective_precession_rate(spin.n_qubits, omega, coupling)
    return build_nonclassical_hamiltonian(spin, rate)
