import math
from collections.abc import Iterable, Mapping

from loguru import logger

from src.domain.entities import Slot, SlotPartition, SlotRectangle
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import COARSE_GRAINING_WARNING, THREE_REGION_NORTH, THREE_REGION_SOUTH


def _cap(theta_lo: float, theta_hi: float) -> tuple[SlotRectangle, ...]:
    return (SlotRectangle(theta_lo, theta_hi),)


def _finish(partition: SlotPartition) -> SlotPartition:
    if not partition.is_coarse:
        logger.warning(
            f"Coarse-graining scale {partition.coarse_graining_scale:.3g} rad gives "
            f"dTheta*sqrt(j) = {partition.coarse_graining_ratio:.2f} < {COARSE_GRAINING_WARNING} "
            f"for {partition.spin}; slots are not classical-like"
        )
    return partition


def whole_sphere(spin: SpinQuantumNumber) -> SlotPartition:
    return _finish(SlotPartition(spin, (Slot("sphere", _cap(0.0, math.pi)),), math.pi))


def hemispheres(spin: SpinQuantumNumber) -> SlotPartition:
    slots = (
        Slot("north", _cap(0.0, math.pi / 2)),
        Slot("south", _cap(math.pi / 2, math.pi)),
    )
    return _finish(SlotPartition(spin, slots, math.pi / 2))


def three_region(
    spin: SpinQuantumNumber,
    north_edge: float = THREE_REGION_NORTH,
    south_edge: float = THREE_REGION_SOUTH,
) -> SlotPartition:
    """North cap, equatorial band and south cap"""
    slots = (
        Slot("north", _cap(0.0, north_edge)),
        Slot("equator", _cap(north_edge, south_edge)),
        Slot("south", _cap(south_edge, math.pi)),
    )
    scale = min(north_edge, south_edge - north_edge, math.pi - south_edge)
    return _finish(SlotPartition(spin, slots, scale))


def band_partition(spin: SpinQuantumNumber, delta_theta: float) -> SlotPartition:
    """
    Equal-width theta bands of width close to delta_theta.

    The first band is named north and the last south so the band series
    can feed the continuity witness.
    """
    if not 0 < delta_theta <= math.pi:
        raise ValueError(f"Band width must lie in (0, pi], got {delta_theta}")

    count = max(1, round(math.pi / delta_theta))
    width = math.pi / count
    if count == 1:
        return whole_sphere(spin)

    slots = []
    for index in range(count):
        name = "north" if index == 0 else "south" if index == count - 1 else f"band_{index}"
        upper = math.pi if index == count - 1 else (index + 1) * width
        slots.append(Slot(name, _cap(index * width, upper)))
    return _finish(SlotPartition(spin, tuple(slots), width))


def partition_from_rectangles(
    spin: SpinQuantumNumber,
    slots: Mapping[str, Iterable[Mapping[str, float]]],
    coarse_graining_scale: float | None = None,
) -> SlotPartition:
    """
    Build a partition from named lists of rectangles.

    Each rectangle is a mapping with theta_lo, theta_hi and optionally
    phi_lo, phi_hi (radians). When no scale is given the smallest
    rectangle extent is used.
    """
    built = []
    extents = []
    for name, rectangles in slots.items():
        parsed = tuple(SlotRectangle(**dict(rectangle)) for rectangle in rectangles)
        built.append(Slot(name, parsed))
        for rectangle in parsed:
            extents.append(rectangle.theta_hi - rectangle.theta_lo)
            if not rectangle.full_phi:
                mid_theta = (rectangle.theta_lo + rectangle.theta_hi) / 2
                extents.append(math.sin(mid_theta) * (rectangle.phi_hi - rectangle.phi_lo))

    scale = coarse_graining_scale if coarse_graining_scale is not None else min(extents)
    return _finish(SlotPartition(spin, tuple(built), scale))
