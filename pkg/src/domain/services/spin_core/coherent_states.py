"""Spin coherent states in the Dicke basis"""

import numpy as np
from scipy.special import gammaln

from src.domain.entities import DickeState
from src.domain.value_objects import SphericalAngle, SpinQuantumNumber


def log_binomial(n: int, k: np.ndarray) -> np.ndarray:
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def coherent_amplitudes(
    spin: SpinQuantumNumber, theta: np.ndarray, phi: np.ndarray
) -> np.ndarray:
    """
    Coherent-state amplitudes for many directions at once.

    Row n holds |Omega_n> in basis order m = -j .. +j, with amplitude
    sqrt(C(2j, j+m)) cos^(j+m)(theta/2) sin^(j-m)(theta/2) exp(-i (j-m) phi).

    :param spin: Collective spin.
    :param theta: Polar angles, radians.
    :param phi: Azimuthal angles, radians.
    :return: Complex array of shape (len(theta), 2j+1).
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    phi = np.atleast_1d(np.asarray(phi, dtype=float))

    # j + m and j - m per basis index
    ups = np.arange(spin.dimension)
    downs = spin.two_j - ups

    magnitudes = (
        np.exp(0.5 * log_binomial(spin.two_j, ups))[None, :]
        * np.cos(theta / 2)[:, None] ** ups[None, :]
        * np.sin(theta / 2)[:, None] ** downs[None, :]
    )
    phases = np.exp(-1j * downs[None, :] * phi[:, None])
    return magnitudes * phases


def make_coherent_state(spin: SpinQuantumNumber, angle: SphericalAngle) -> DickeState:
    amplitudes = coherent_amplitudes(spin, np.array([angle.theta]), np.array([angle.phi]))[0]
    return DickeState.normalized(spin, amplitudes)


def coherent_overlap_law(spin: SpinQuantumNumber, first: SphericalAngle, second: SphericalAngle) -> float:
    """|<Omega_1|Omega_2>|^2 = ((1 + cos Theta) / 2)^(2j)"""
    return ((1 + np.cos(first.angle_to(second))) / 2) ** spin.two_j
