import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from src.domain.entities.quantum_state import CollectiveOperator, _frozen_array
from src.domain.value_objects import SphericalAngle, SpinQuantumNumber
from src.shared.constants import COARSE_GRAINING_WARNING, Tolerances
from src.shared.exceptions import GridResolutionError, InvalidStateError, PartitionError

TWO_PI = 2 * math.pi
_AREA_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Product quadrature on the unit sphere: composite Gauss-Legendre in cos(theta) times phi nodes"""

    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray
    n_theta: int
    n_phi: int
    theta_breaks: tuple[float, ...] = ()
    phi_breaks: tuple[float, ...] = ()

    def __post_init__(self):
        theta = _frozen_array(self.theta, dtype=float)
        phi = _frozen_array(self.phi, dtype=float)
        weights = _frozen_array(self.weights, dtype=float)

        if not theta.shape == phi.shape == weights.shape or theta.ndim != 1:
            raise ValueError("Grid node and weight arrays must be one-dimensional and aligned")

        if np.any(weights <= 0):
            raise ValueError("Quadrature weights must be positive")

        residual = abs(float(weights.sum()) - 4 * math.pi)
        if residual > Tolerances.GRID_WEIGHT_SUM:
            raise GridResolutionError(
                f"Grid weights sum to 4*pi only within {residual:.3e}", residual=residual
            )

        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return self.theta.shape[0]

    @property
    def signature(self) -> tuple:
        return (self.n_theta, self.n_phi, self.theta_breaks, self.phi_breaks)

    @cached_property
    def nodes(self) -> list[SphericalAngle]:
        return [SphericalAngle.wrapped(t, p) for t, p in zip(self.theta, self.phi)]

    def integrate(self, values: np.ndarray) -> float:
        return float(np.dot(self.weights, values))


@dataclass(frozen=True, eq=False)
class QDistribution:
    """Husimi Q sampled at the grid nodes, in 1/steradian"""

    values: np.ndarray
    grid: SphereGrid
    spin: SpinQuantumNumber

    def __post_init__(self):
        values = _frozen_array(self.values, dtype=float)
        if values.shape != (len(self.grid),):
            raise ValueError(
                f"Expected {len(self.grid)} Q values, got shape {values.shape}"
            )

        if float(values.min()) < Tolerances.Q_NEGATIVITY:
            raise InvalidStateError(f"Q distribution is negative ({values.min():.3e})")

        normalization = self.grid.integrate(values)
        if abs(normalization - 1.0) > Tolerances.IDENTITY_RESOLUTION:
            raise GridResolutionError(
                f"Q integrates to {normalization!r} on this grid; grid too coarse for {self.spin}",
                residual=abs(normalization - 1.0),
            )

        object.__setattr__(self, "values", values)

    def total(self) -> float:
        return self.grid.integrate(self.values)

    def total_variation(self, other: "QDistribution | np.ndarray") -> float:
        other_values = other.values if isinstance(other, QDistribution) else other
        return 0.5 * self.grid.integrate(np.abs(self.values - other_values))


@dataclass(frozen=True)
class SlotRectangle:
    """theta in [theta_lo, theta_hi), phi in [phi_lo, phi_hi), radians"""

    theta_lo: float
    theta_hi: float
    phi_lo: float = 0.0
    phi_hi: float = TWO_PI

    def __post_init__(self):
        if not 0.0 <= self.theta_lo < self.theta_hi <= math.pi + 1e-12:
            raise PartitionError(
                f"Invalid theta range [{self.theta_lo}, {self.theta_hi}] for a slot rectangle"
            )

        if not 0.0 <= self.phi_lo < self.phi_hi <= TWO_PI + 1e-12:
            raise PartitionError(
                f"Invalid phi range [{self.phi_lo}, {self.phi_hi}] for a slot rectangle"
            )

    @property
    def full_phi(self) -> bool:
        return self.phi_lo <= 1e-12 and self.phi_hi >= TWO_PI - 1e-12

    @property
    def area(self) -> float:
        return (self.phi_hi - self.phi_lo) * (math.cos(self.theta_lo) - math.cos(self.theta_hi))

    def contains(self, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
        upper_theta = theta <= self.theta_hi if self.theta_hi >= math.pi else theta < self.theta_hi
        upper_phi = phi <= self.phi_hi if self.phi_hi >= TWO_PI else phi < self.phi_hi
        return (theta >= self.theta_lo) & upper_theta & (phi >= self.phi_lo) & upper_phi

    def overlap_area(self, other: "SlotRectangle") -> float:
        theta_lo = max(self.theta_lo, other.theta_lo)
        theta_hi = min(self.theta_hi, other.theta_hi)
        phi_lo = max(self.phi_lo, other.phi_lo)
        phi_hi = min(self.phi_hi, other.phi_hi)
        if theta_hi <= theta_lo or phi_hi <= phi_lo:
            return 0.0
        return (phi_hi - phi_lo) * (math.cos(theta_lo) - math.cos(theta_hi))


@dataclass(frozen=True)
class Slot:
    name: str
    rectangles: tuple[SlotRectangle, ...]

    def __post_init__(self):
        if not self.name:
            raise PartitionError("Slot name cannot be empty")

        if not self.rectangles:
            raise PartitionError(f"Slot {self.name!r} has no rectangles")

    @property
    def area(self) -> float:
        return sum(rectangle.area for rectangle in self.rectangles)

    def contains(self, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
        mask = np.zeros(np.shape(theta), dtype=bool)
        for rectangle in self.rectangles:
            mask |= rectangle.contains(theta, phi)
        return mask


@dataclass(frozen=True)
class SlotPartition:
    """Disjoint angular slots covering the sphere, with the coarse-graining scale they resolve"""

    spin: SpinQuantumNumber
    slots: tuple[Slot, ...]
    coarse_graining_scale: float

    def __post_init__(self):
        if not self.slots:
            raise PartitionError("A partition needs at least one slot")

        names = [slot.name for slot in self.slots]
        if len(set(names)) != len(names):
            raise PartitionError(f"Slot names must be unique, got {names}")

        if self.coarse_graining_scale <= 0:
            raise PartitionError("Coarse-graining scale must be positive")

        rectangles = [rectangle for slot in self.slots for rectangle in slot.rectangles]
        for first in range(len(rectangles)):
            for second in range(first + 1, len(rectangles)):
                overlap = rectangles[first].overlap_area(rectangles[second])
                if overlap > _AREA_TOLERANCE:
                    raise PartitionError(
                        f"Slot regions overlap (shared area {overlap:.3e} sr): "
                        f"{rectangles[first]} and {rectangles[second]}"
                    )

        covered = sum(rectangle.area for rectangle in rectangles)
        if abs(covered - 4 * math.pi) > _AREA_TOLERANCE:
            raise PartitionError(
                f"Slots cover {covered:.12f} sr instead of the full sphere (4*pi)"
            )

    def __len__(self) -> int:
        return len(self.slots)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(slot.name for slot in self.slots)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError as e:
            raise PartitionError(f"Partition has no slot named {name!r}") from e

    @property
    def coarse_graining_ratio(self) -> float:
        """Delta-Theta * sqrt(j); slots are classical-like when this is large"""
        return self.coarse_graining_scale * math.sqrt(self.spin.j)

    @property
    def is_coarse(self) -> bool:
        return self.coarse_graining_ratio >= COARSE_GRAINING_WARNING

    @property
    def theta_breaks(self) -> tuple[float, ...]:
        borders = {
            edge
            for slot in self.slots
            for rectangle in slot.rectangles
            for edge in (rectangle.theta_lo, rectangle.theta_hi)
        }
        return tuple(sorted(b for b in borders if 1e-12 < b < math.pi - 1e-12))

    @property
    def phi_breaks(self) -> tuple[float, ...]:
        borders = {
            edge
            for slot in self.slots
            for rectangle in slot.rectangles
            if not rectangle.full_phi
            for edge in (rectangle.phi_lo, rectangle.phi_hi)
        }
        return tuple(sorted({b % TWO_PI for b in borders}))

    def assign(self, grid: SphereGrid) -> np.ndarray:
        """Slot index of every grid node"""
        labels = np.full(len(grid), -1, dtype=int)
        counts = np.zeros(len(grid), dtype=int)
        for index, slot in enumerate(self.slots):
            mask = slot.contains(grid.theta, grid.phi)
            labels[mask] = index
            counts += mask

        if np.any(counts != 1):
            raise PartitionError(
                f"{int(np.sum(counts == 0))} grid nodes fall in no slot and "
                f"{int(np.sum(counts > 1))} in several"
            )
        return labels

    def border_distance(self, grid: SphereGrid) -> np.ndarray:
        """Approximate angular distance of each node to the nearest slot border"""
        distance = np.full(len(grid), np.inf)
        for border in self.theta_breaks:
            distance = np.minimum(distance, np.abs(grid.theta - border))
        for border in self.phi_breaks:
            gap = np.abs((grid.phi - border + math.pi) % TWO_PI - math.pi)
            distance = np.minimum(distance, np.sin(grid.theta) * gap)
        return distance


@dataclass(frozen=True, eq=False)
class PovmSet:
    """Coarse-grained slot POVM: elements P_k and principal-root Kraus operators M_k"""

    elements: tuple[CollectiveOperator, ...]
    kraus: tuple[CollectiveOperator, ...]
    partition: SlotPartition
    grid_signature: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if len(self.elements) != len(self.partition) or len(self.kraus) != len(self.elements):
            raise PartitionError("POVM needs one element and one Kraus operator per slot")

        dimension = self.partition.spin.dimension
        total = np.zeros((dimension, dimension), dtype=complex)
        for name, element, kraus in zip(self.partition.names, self.elements, self.kraus):
            eigenvalues = np.linalg.eigvalsh(element.entries)
            if eigenvalues[0] < -Tolerances.POVM_POSITIVITY or eigenvalues[-1] > 1 + Tolerances.POVM_POSITIVITY:
                raise InvalidStateError(
                    f"POVM element {name!r} has eigenvalues outside [0, 1]: "
                    f"[{eigenvalues[0]:.3e}, {eigenvalues[-1]:.3e}]"
                )

            mismatch = float(np.max(np.abs(kraus.dagger @ kraus.entries - element.entries)))
            if mismatch > Tolerances.POVM_POSITIVITY:
                raise InvalidStateError(
                    f"Kraus operator for {name!r} does not square to its element ({mismatch:.3e})"
                )
            total += element.entries

        residual = float(np.max(np.abs(total - np.eye(dimension))))
        if residual > Tolerances.POVM_COMPLETENESS:
            raise GridResolutionError(
                f"POVM completeness residual {residual:.3e}; the grid is too coarse",
                residual=residual,
            )

    def __len__(self) -> int:
        return len(self.elements)

    def completeness_residual(self) -> float:
        total = sum(element.entries for element in self.elements)
        return float(np.max(np.abs(total - np.eye(total.shape[0]))))

    def probabilities(self, rho_entries: np.ndarray) -> np.ndarray:
        return np.array(
            [float(np.trace(rho_entries @ element.entries).real) for element in self.elements]
        )
