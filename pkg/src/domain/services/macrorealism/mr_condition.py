from collections.abc import Sequence
from typing import Protocol

import numpy as np
from loguru import logger

from src.domain.entities import DensityMatrix, MRReport, PairDistance, PovmSet, SphereGrid
from src.domain.services.husimi_povm import kraus_reduce, q_values
from src.shared.constants import DEFAULT_MR_EPSILON
from src.shared.exceptions import UnreachableOutcomeError


class EvolutionChannel(Protocol):
    """Anything that can carry a state from t_start to t_stop"""

    def evolve(self, rho: DensityMatrix, t_start: float, t_stop: float) -> DensityMatrix: ...


def mr_condition_check(
    channel: EvolutionChannel,
    rho0: DensityMatrix,
    povm: PovmSet,
    pairs: Sequence[tuple[float, float]],
    grid: SphereGrid,
    epsilon: float = DEFAULT_MR_EPSILON,
) -> MRReport:
    """
    Compare Q(t_j) of the unmeasured state with sum_k w_k Q_k(t_j), where
    w_k and rho_k come from measuring the slots at t_i and rho_k is then
    evolved to t_j. The distance per pair is the total variation
    (1/2) integral |Q_lhs - Q_rhs| over the sphere.

    Outcomes with w_k <= 1e-12 are skipped and listed on the pair.
    """
    if not rho0.is_dicke:
        raise ValueError("Macrorealism checks run on Dicke-basis states")

    spin = rho0.spin
    results = []
    for t_i, t_j in pairs:
        if t_i > t_j:
            raise ValueError(f"Pair ({t_i}, {t_j}) is not ordered")

        unmeasured = channel.evolve(rho0, 0.0, t_j) if t_j > 0 else rho0
        lhs = q_values(unmeasured.entries, spin, grid)

        at_measurement = channel.evolve(rho0, 0.0, t_i) if t_i > 0 else rho0
        rhs = np.zeros(len(grid))
        skipped = []
        for k, name in enumerate(povm.partition.names):
            try:
                probability, reduced = kraus_reduce(at_measurement, povm, k)
            except UnreachableOutcomeError as e:
                logger.info(f"Pair ({t_i:g}, {t_j:g}): skipping slot {name!r}, {e}")
                skipped.append(name)
                continue

            evolved = channel.evolve(reduced, t_i, t_j) if t_j > t_i else reduced
            rhs += probability * q_values(evolved.entries, spin, grid)

        delta = 0.5 * grid.integrate(np.abs(lhs - rhs))
        results.append(
            PairDistance(
                t_i=float(t_i),
                t_j=float(t_j),
                delta=float(min(max(delta, 0.0), 1.0)),
                skipped_slots=tuple(skipped),
            )
        )
        logger.debug(f"MR pair ({t_i:g}, {t_j:g}): delta = {delta:.3e}")

    report = MRReport(pairs=tuple(results), epsilon=epsilon)
    logger.info(
        f"Macrorealism check over {len(results)} pairs: max delta {report.max_delta:.3e} "
        f"vs epsilon {epsilon} -> {report.verdict}"
    )
    return report
