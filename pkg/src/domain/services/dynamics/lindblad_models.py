import math

import numpy as np
from loguru import logger

from src.domain.entities import (
    CollectiveOperator,
    Coupling,
    EnvironmentKind,
    LindbladModel,
    OperatorLabel,
    OperatorScheme,
    Representation,
)
from src.domain.services.spin_core import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    build_dicke_hamiltonian,
    build_product_hamiltonian,
    build_spin_operators,
    collective_sum,
    local_operator,
)
from src.domain.value_objects import SpinQuantumNumber


def _hamiltonian(spin: SpinQuantumNumber, omega: float, representation, coupling) -> CollectiveOperator:
    if representation is Representation.FULL:
        return build_product_hamiltonian(spin.n_qubits, omega, coupling)
    return build_dicke_hamiltonian(spin, omega, coupling)


def _check_scheme(representation: Representation, operators: OperatorScheme):
    if operators is OperatorScheme.LOCAL and representation is not Representation.FULL:
        raise ValueError("Local Lindblad operators break permutation symmetry; use the full representation")


def build_closed_model(
    n_qubits: int,
    omega: float,
    representation: Representation = Representation.DICKE,
    coupling: Coupling = Coupling.PRECESSION,
) -> LindbladModel:
    spin = SpinQuantumNumber.from_qubits(n_qubits)
    return LindbladModel(
        spin=spin,
        hamiltonian=_hamiltonian(spin, omega, representation, coupling),
        lindblad_ops=(),
        omega=omega,
        representation=representation,
        coupling=coupling,
    )


def build_dephasing_model(
    n_qubits: int,
    omega: float,
    gamma_dp: float,
    representation: Representation = Representation.DICKE,
    coupling: Coupling = Coupling.PRECESSION,
    operators: OperatorScheme = OperatorScheme.COLLECTIVE,
) -> LindbladModel:
    """
    Local dephasing, L_dp = gamma_dp sum_i sigma+_i sigma-_i.

    With the factor-2 ladder operators sigma+ sigma- = 2 (1 + sigma^z), so the
    collective operator is 4 gamma_dp (J_z + j) in the Dicke basis.
    """
    _check_scheme(representation, operators)
    spin = SpinQuantumNumber.from_qubits(n_qubits)
    single = SIGMA_PLUS @ SIGMA_MINUS

    if representation is Representation.DICKE:
        jz = build_spin_operators(spin).jz.entries
        lindblad = [4 * gamma_dp * (jz + spin.j * np.eye(spin.dimension))]
    elif operators is OperatorScheme.COLLECTIVE:
        lindblad = [gamma_dp * collective_sum(single, n_qubits)]
    else:
        lindblad = [gamma_dp * local_operator(single, site, n_qubits) for site in range(n_qubits)]

    model = LindbladModel(
        spin=spin,
        hamiltonian=_hamiltonian(spin, omega, representation, coupling),
        lindblad_ops=tuple(
            CollectiveOperator(op, OperatorLabel.LINDBLAD, f"L_dp[{k}]") for k, op in enumerate(lindblad)
        ),
        omega=omega,
        environment=EnvironmentKind.DEPHASING,
        representation=representation,
        coupling=coupling,
        gamma_dp=gamma_dp,
    )
    logger.debug(f"Built {model.describe()}")
    return model


def build_thermal_model(
    n_qubits: int,
    omega: float,
    gamma_th: float,
    n_bar: float,
    representation: Representation = Representation.DICKE,
    coupling: Coupling = Coupling.PRECESSION,
    operators: OperatorScheme = OperatorScheme.COLLECTIVE,
) -> LindbladModel:
    """
    Thermal bath, L_th = (1/2) sum_i gamma_th [(n_bar + 1) sigma-_i - n_bar sigma+_i].

    The factor-2 ladder operators turn this into
    gamma_th [(n_bar + 1) J- - n_bar J+] in the Dicke basis.
    """
    _check_scheme(representation, operators)
    spin = SpinQuantumNumber.from_qubits(n_qubits)
    single = 0.5 * gamma_th * ((n_bar + 1) * SIGMA_MINUS - n_bar * SIGMA_PLUS)

    if representation is Representation.DICKE:
        ladder = build_spin_operators(spin)
        lindblad = [gamma_th * ((n_bar + 1) * ladder.jminus.entries - n_bar * ladder.jplus.entries)]
    elif operators is OperatorScheme.COLLECTIVE:
        lindblad = [collective_sum(single, n_qubits)]
    else:
        lindblad = [local_operator(single, site, n_qubits) for site in range(n_qubits)]

    model = LindbladModel(
        spin=spin,
        hamiltonian=_hamiltonian(spin, omega, representation, coupling),
        lindblad_ops=tuple(
            CollectiveOperator(op, OperatorLabel.LINDBLAD, f"L_th[{k}]") for k, op in enumerate(lindblad)
        ),
        omega=omega,
        environment=EnvironmentKind.THERMAL,
        representation=representation,
        coupling=coupling,
        gamma_th=gamma_th,
        n_bar=n_bar,
    )
    logger.debug(f"Built {model.describe()}")
    return model


def dephasing_decay_rate(spin: SpinQuantumNumber, omega_eff: float, gamma_dp: float) -> float:
    """
    Slow decay rate of a(t) = 2A(t) - 1 under collective dephasing.

    The coherence between |+j> and |-j> decays at Gamma = 32 gamma_dp^2 j^2;
    with precession at omega_eff the two-level Bloch equations give
    nu = (Gamma - sqrt(Gamma^2 - 16 omega_eff^2)) / 2 (overdamped branch).
    """
    gamma = 32 * gamma_dp**2 * spin.j**2
    discriminant = gamma**2 - 16 * omega_eff**2
    if discriminant < 0:
        # Underdamped: a(t) oscillates under an envelope decaying at Gamma / 2
        return gamma / 2
    # Same root written without cancellation
    return 8 * omega_eff**2 / (gamma + math.sqrt(discriminant))
