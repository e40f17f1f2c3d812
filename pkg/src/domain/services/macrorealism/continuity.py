from collections.abc import Sequence

import numpy as np
from loguru import logger

from src.domain.entities import (
    ContinuityReport,
    DensityMatrix,
    MagnetizationHistogram,
    PovmSet,
    SlotTimeSeries,
)
from src.domain.value_objects import SpinQuantumNumber
from src.shared.constants import CONTINUITY_MAX_STEP, DEFAULT_DELTA_TRANSFER, DEFAULT_EPS_MID


def continuity_witness(
    series: SlotTimeSeries,
    eps_mid: float = DEFAULT_EPS_MID,
    delta_transfer: float = DEFAULT_DELTA_TRANSFER,
    omega: float | None = None,
) -> ContinuityReport:
    """
    W = max over t of P_south(t) - P_south(0), taken only while the middle
    slots have never held eps_mid or more up to t.

    A violation (probability reaching the south slot without crossing the
    middle) is reported when W >= delta_transfer. With omega given, grids
    coarser than omega * dt = 0.1 are flagged unreliable.
    """
    if not 0 < eps_mid < 1 or not 0 < delta_transfer <= 1:
        raise ValueError("eps_mid must lie in (0, 1) and delta_transfer in (0, 1]")

    south = series.south_probability()
    running_middle = np.maximum.accumulate(series.middle_probability())
    gate_open = running_middle < eps_mid
    transfer = np.where(gate_open, south - south[0], 0.0)

    witness = max(0.0, float(transfer.max()))
    violation_time = None
    if witness >= delta_transfer:
        violation_time = float(series.times[int(np.argmax(transfer >= delta_transfer))])

    reliable = True
    max_step_omega = None
    if omega is not None and len(series.times) > 1:
        max_step_omega = float(np.max(np.diff(series.times)) * omega)
        reliable = max_step_omega <= CONTINUITY_MAX_STEP * (1 + 1e-9)
        if not reliable:
            logger.warning(
                f"Continuity witness grid has omega*dt = {max_step_omega:.3g} > "
                f"{CONTINUITY_MAX_STEP}; the result is unreliable"
            )

    return ContinuityReport(
        witness=witness,
        eps_mid=eps_mid,
        delta_transfer=delta_transfer,
        violation_time=violation_time,
        reliable=reliable,
        max_step_omega=max_step_omega,
    )


def slot_series_from_histograms(
    histograms: Sequence[MagnetizationHistogram],
    spin: SpinQuantumNumber,
) -> SlotTimeSeries:
    """
    Three-slot series from magnetization histograms: the bin holding -j is
    south, the bin holding +j is north and every other bin is middle.
    """
    if not histograms:
        raise ValueError("Need at least one histogram")

    edges = histograms[0].edges
    rows = []
    for histogram in histograms:
        if not np.array_equal(histogram.edges, edges):
            raise ValueError("All histograms must share the same bins")

        south_bin = histogram.bin_of(-spin.j)
        north_bin = histogram.bin_of(spin.j)
        if south_bin == north_bin:
            raise ValueError("North and south fall in the same bin; use finer bins")

        south = histogram.probabilities[south_bin]
        north = histogram.probabilities[north_bin]
        rows.append([south, 1.0 - south - north, north])

    return SlotTimeSeries(
        times=np.array([h.time for h in histograms]),
        labels=("south", "middle", "north"),
        probabilities=np.array(rows),
        north=2,
        south=0,
    )


def slot_series_from_partition(
    times: Sequence[float],
    states: Sequence[DensityMatrix],
    povm: PovmSet,
) -> SlotTimeSeries:
    """Tr[rho(t) P_k] per slot; the partition must name a north and a south slot"""
    partition = povm.partition
    north, south = partition.index_of("north"), partition.index_of("south")
    probabilities = np.array([povm.probabilities(state.entries) for state in states])
    probabilities = np.clip(probabilities, 0.0, None)
    probabilities /= probabilities.sum(axis=1, keepdims=True)
    return SlotTimeSeries(
        times=np.asarray(times, dtype=float),
        labels=partition.names,
        probabilities=probabilities,
        north=north,
        south=south,
    )
