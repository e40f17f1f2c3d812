"""Stepwise dephasing: free precession for delta_t, then decoherence in the {|+j>, |-j>} pointer basis"""

import math

import numpy as np
from loguru import logger

from src.domain.entities import DensityMatrix, SurvivalSeries
from src.domain.services.spin_core import build_nonclassical_hamiltonian, propagator
from src.domain.value_objects import SpinQuantumNumber, ToyModelParams
from src.shared.constants import Tolerances
from src.shared.exceptions import SupportLeakageError


def support_leakage(rho: DensityMatrix) -> float:
    """Largest matrix weight outside the two-state block spanned by |+j> and |-j>"""
    block = [rho.spin.south_index, rho.spin.north_index]
    outside = np.abs(rho.entries).copy()
    outside[np.ix_(block, block)] = 0.0
    return float(outside.max())


def toy_step(rho: DensityMatrix, params: ToyModelParams) -> DensityMatrix:
    """Apply U(delta_t), then zero the (+j, -j) and (-j, +j) coherences"""
    if not rho.is_dicke:
        raise ValueError("The toy model acts on Dicke-basis states")

    leakage = support_leakage(rho)
    if leakage > Tolerances.SUPPORT_LEAKAGE:
        raise SupportLeakageError(
            f"State has weight {leakage:.3e} outside span{{|+j>, |-j>}}", leakage=leakage
        )

    unitary = _step_unitary(rho.spin, params)
    evolved = unitary @ rho.entries @ unitary.conj().T

    north, south = rho.spin.north_index, rho.spin.south_index
    evolved[north, south] = 0.0
    evolved[south, north] = 0.0
    return rho.with_entries(evolved)


def _step_unitary(spin: SpinQuantumNumber, params: ToyModelParams) -> np.ndarray:
    hamiltonian = build_nonclassical_hamiltonian(spin, params.omega)
    return propagator(hamiltonian, params.delta_t).entries


def toy_evolve(rho: DensityMatrix, params: ToyModelParams, n_steps: int) -> list[DensityMatrix]:
    """States after 0, 1, ..., n_steps steps"""
    states = [rho]
    for _ in range(n_steps):
        states.append(toy_step(states[-1], params))
    return states


def survival_recurrence(c: float, n: int) -> float:
    """A_n = c A_(n-1) + (1 - c)(1 - A_(n-1)) with A_0 = 1"""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"c must lie in [0, 1], got {c}")

    if n < 0:
        raise ValueError(f"n cannot be negative, got {n}")

    survival = 1.0
    for _ in range(n):
        survival = c * survival + (1 - c) * (1 - survival)
    return survival


def survival_closed_form(c: float, n: int) -> float:
    return 0.5 * (1 + (2 * c - 1) ** n)


def toy_survival_series(spin: SpinQuantumNumber, params: ToyModelParams) -> SurvivalSeries:
    """Simulated A_n for the north initial state over params.n_steps steps"""
    for warning in params.validity_warnings():
        logger.warning(warning)

    north = DensityMatrix.diagonal(spin, np.eye(spin.dimension)[spin.north_index])
    states = toy_evolve(north, params, params.n_steps)
    values = [state.population(spin.j) for state in states]
    return SurvivalSeries(times=np.array(params.times()), values=np.array(values))


def lattice_steps(params: ToyModelParams, t_start: float, t_stop: float) -> int:
    """Number of whole steps between two lattice times"""
    span = (t_stop - t_start) / params.delta_t
    steps = round(span)
    if steps < 0 or not math.isclose(span, steps, abs_tol=1e-9):
        raise ValueError(
            f"Interval [{t_start}, {t_stop}] is not a whole number of toy steps of {params.delta_t}"
        )
    return steps
