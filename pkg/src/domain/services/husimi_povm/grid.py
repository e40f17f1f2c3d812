import math
from collections.abc import Sequence

import numpy as np
from loguru import logger
from scipy.special import roots_legendre

from src.domain.entities import SphereGrid
from src.domain.services.spin_core import coherent_amplitudes
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import GRID_NODES_PER_LEVEL, MIN_GRID_NODES, Tolerances
from src.shared.exceptions import GridResolutionError

MIN_NODES_PER_AXIS = 8


def default_resolution(spin: SpinQuantumNumber) -> int:
    """Nodes per axis (and per panel): max(64, 8 (2j+1))"""
    return max(MIN_GRID_NODES, GRID_NODES_PER_LEVEL * spin.dimension)


def _theta_panels(n_theta: int, theta_breaks: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes in u = cos(theta) on every panel between consecutive breaks"""
    roots, root_weights = roots_legendre(n_theta)
    edges = [0.0, *sorted(theta_breaks), math.pi]

    thetas, weights = [], []
    for upper_theta, lower_theta in zip(edges[:-1], edges[1:]):
        u_hi, u_lo = math.cos(upper_theta), math.cos(lower_theta)
        half_width = (u_hi - u_lo) / 2
        u = u_lo + half_width * (roots + 1)
        thetas.append(np.arccos(np.clip(u, -1.0, 1.0)))
        weights.append(half_width * root_weights)
    return np.concatenate(thetas), np.concatenate(weights)


def _phi_panels(n_phi: int, phi_breaks: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    if not phi_breaks:
        # Periodic rule, offset by half a step so no node sits on phi = 0
        step = 2 * math.pi / n_phi
        return step * (np.arange(n_phi) + 0.5), np.full(n_phi, step)

    roots, root_weights = roots_legendre(n_phi)
    starts = sorted({b % (2 * math.pi) for b in phi_breaks})
    stops = [*starts[1:], starts[0] + 2 * math.pi]

    phis, weights = [], []
    for start, stop in zip(starts, stops):
        half_width = (stop - start) / 2
        phis.append((start + half_width * (roots + 1)) % (2 * math.pi))
        weights.append(half_width * root_weights)
    return np.concatenate(phis), np.concatenate(weights)


def make_grid(
    n_theta: int,
    n_phi: int,
    spin: SpinQuantumNumber | None = None,
    theta_breaks: Sequence[float] = (),
    phi_breaks: Sequence[float] = (),
) -> SphereGrid:
    """
    Product quadrature on the sphere.

    n_theta Gauss-Legendre nodes in cos(theta) on each theta panel, crossed
    with n_phi nodes in phi (periodic midpoint rule, or Gauss-Legendre on
    each phi panel when breaks are given). Breaks let slot borders coincide
    with panel edges.

    :raises GridResolutionError: when a spin is given and the grid cannot
        resolve it (node count below 2 (2j+1)^2 or the coherent-state
        resolution of identity off by more than 1e-8).
    """
    if n_theta < MIN_NODES_PER_AXIS or n_phi < MIN_NODES_PER_AXIS:
        raise ValueError(
            f"Grid needs at least {MIN_NODES_PER_AXIS} nodes per axis, got {n_theta}x{n_phi}"
        )

    theta_breaks = tuple(sorted(theta_breaks))
    phi_breaks = tuple(sorted(b % (2 * math.pi) for b in phi_breaks))

    theta_nodes, theta_weights = _theta_panels(n_theta, theta_breaks)
    phi_nodes, phi_weights = _phi_panels(n_phi, phi_breaks)

    grid = SphereGrid(
        theta=np.repeat(theta_nodes, phi_nodes.size),
        phi=np.tile(phi_nodes, theta_nodes.size),
        weights=np.outer(theta_weights, phi_weights).ravel(),
        n_theta=n_theta,
        n_phi=n_phi,
        theta_breaks=theta_breaks,
        phi_breaks=phi_breaks,
    )

    if spin is not None:
        check_resolution(grid, spin)

    logger.debug(
        f"Sphere grid with {len(grid)} nodes ({n_theta}x{n_phi} per panel, "
        f"{len(theta_breaks)} theta and {len(phi_breaks)} phi breaks)"
    )
    return grid


def identity_residual(grid: SphereGrid, spin: SpinQuantumNumber) -> float:
    """max |(2j+1)/(4 pi) sum_i w_i |Omega_i><Omega_i| - 1|"""
    amplitudes = coherent_amplitudes(spin, grid.theta, grid.phi)
    resolution = (spin.dimension / (4 * math.pi)) * (
        amplitudes.T @ (grid.weights[:, None] * amplitudes.conj())
    )
    return float(np.max(np.abs(resolution - np.eye(spin.dimension))))


def check_resolution(grid: SphereGrid, spin: SpinQuantumNumber):
    required = 2 * spin.dimension**2
    if len(grid) < required:
        raise GridResolutionError(
            f"Grid has {len(grid)} nodes; {spin} needs at least {required}",
            residual=math.inf,
        )

    residual = identity_residual(grid, spin)
    if residual > Tolerances.IDENTITY_RESOLUTION:
        raise GridResolutionError(
            f"Coherent-state resolution of identity off by {residual:.3e} for {spin}",
            residual=residual,
        )


def default_grid(
    spin: SpinQuantumNumber,
    theta_breaks: Sequence[float] = (),
    phi_breaks: Sequence[float] = (),
) -> SphereGrid:
    n = default_resolution(spin)
    return make_grid(n, n, spin=spin, theta_breaks=theta_breaks, phi_breaks=phi_breaks)
