import itertools
import math
from collections.abc import Callable, Sequence

import numpy as np

from src.domain.entities import SurvivalSeries
from src.shared.exceptions import SurvivalRangeError

SurvivalFunction = Callable[[float], float]

_RANGE_SLACK = 1e-12


def survival_function(series: SurvivalSeries) -> SurvivalFunction:
    """a(t) = 2 A(t) - 1, linearly interpolated between the series times"""
    times = np.array(series.times)
    contrast = series.contrast()

    def a(t: float) -> float:
        if t < times[0] - 1e-12 or t > times[-1] + 1e-9 * max(1.0, times[-1]):
            raise ValueError(f"t = {t} lies outside the series [{times[0]}, {times[-1]}]")
        return float(np.interp(t, times, contrast))

    return a


def two_state_mr_check(a: SurvivalFunction, t_i: float, t_j: float) -> float:
    """
    Mismatch |a(t_j) - a(t_i) a(t_j - t_i)| / 2 between unmeasured evolution
    and the measure-at-t_i mixture, for states in span{|+j>, |-j>}.
    """
    if not t_i < t_j:
        raise ValueError(f"Need t_i < t_j, got ({t_i}, {t_j})")

    values = (a(t_i), a(t_j), a(t_j - t_i))
    _check_range(values, (t_i, t_j, t_j - t_i))
    return abs(values[1] - values[0] * values[2]) / 2


def _check_range(values: Sequence[float], times: Sequence[float]):
    for value, t in zip(values, times):
        if not -1 - _RANGE_SLACK <= value <= 1 + _RANGE_SLACK:
            raise SurvivalRangeError(
                f"a({t:.6g}) = {value:.6g} leaves [-1, 1]; "
                "growing solutions cannot describe a survival contrast"
            )


def multiplicativity_scan(a: SurvivalFunction, time_grid: Sequence[float]) -> float:
    """Largest two_state_mr_check mismatch over all ordered pairs of grid times"""
    times = sorted(float(t) for t in time_grid)
    if len(times) < 3:
        raise ValueError(f"Multiplicativity scan needs at least 3 grid times, got {len(times)}")

    _check_range([a(t) for t in times], times)
    return max(two_state_mr_check(a, t_i, t_j) for t_i, t_j in itertools.combinations(times, 2) if t_i < t_j)


def log_time_pairs(
    nu: float,
    count: int,
    lattice: float | None = None,
) -> list[tuple[float, float]]:
    """
    All ordered pairs from `count` log-spaced times over [0.1/nu, 5/nu].

    With a lattice spacing the times are snapped to whole multiples of it
    (duplicates dropped), as the stepwise model only exists on its lattice.
    """
    if nu <= 0 or not math.isfinite(nu):
        raise ValueError(f"Pair selection needs a finite positive rate, got {nu}")

    if count < 2:
        raise ValueError(f"Need at least two times to form pairs, got {count}")

    times = np.geomspace(0.1 / nu, 5.0 / nu, count)
    if lattice is not None:
        times = np.unique(np.maximum(1, np.round(times / lattice)) * lattice)

    return [(float(t_i), float(t_j)) for t_i, t_j in itertools.combinations(times, 2)]
