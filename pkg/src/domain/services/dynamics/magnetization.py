import numpy as np

from src.domain.entities import DensityMatrix, MagnetizationHistogram
from src.domain.value_objects import SpinQuantumNumber


def unit_width_bins(spin: SpinQuantumNumber) -> np.ndarray:
    """2j+1 bins of width one centred on the m_z eigenvalues"""
    return np.arange(spin.dimension + 1) - spin.j - 0.5


def check_bins(spin: SpinQuantumNumber, edges: np.ndarray) -> np.ndarray:
    edges = np.asarray(edges, dtype=float)
    if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0):
        raise ValueError("Bin edges must be an ascending sequence of at least two values")

    if edges[0] > -spin.j or edges[-1] < spin.j:
        raise ValueError(
            f"Bins [{edges[0]}, {edges[-1]}] do not cover m_z in [-{spin.j}, {spin.j}]"
        )
    return edges


def magnetization_distribution(
    rho: DensityMatrix, edges: np.ndarray, time: float = 0.0
) -> MagnetizationHistogram:
    """Sum the m_z populations into bins [lo, hi); the last bin also holds its upper edge"""
    spin = rho.spin
    edges = check_bins(spin, edges)
    populations = rho.magnetization_populations()

    bins = np.searchsorted(edges, spin.m_values(), side="right") - 1
    bins = np.clip(bins, 0, edges.size - 2)
    probabilities = np.bincount(bins, weights=populations, minlength=edges.size - 1)
    return MagnetizationHistogram(time=time, edges=edges, probabilities=probabilities / probabilities.sum())
