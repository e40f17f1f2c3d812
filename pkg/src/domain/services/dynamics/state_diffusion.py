"""Quantum state diffusion: diffusive pure-state unraveling of the master equation"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.domain.entities import (
    DensityMatrix,
    DickeState,
    LindbladModel,
    Representation,
    TrajectoryEnsemble,
)
from src.domain.entities.quantum_state import up_spin_counts
from src.domain.services.spin_core import propagator, symmetric_embed
from src.shared.constants import (
    QSD_BLOCK_SIZE,
    QSD_MAX_STEP_HAMILTONIAN,
    QSD_MAX_STEP_OMEGA,
    QSD_MAX_STEP_RATE,
    QSD_NOISE_CHUNK,
    Tolerances,
)
from src.shared.exceptions import TrajectoryInstabilityError


@dataclass(frozen=True, eq=False)
class Trajectory:
    """One pure-state trajectory sampled on the time grid"""

    times: np.ndarray
    states: np.ndarray
    seed: int
    mean_norm_drift: float


@dataclass
class _BlockSums:
    rho: np.ndarray
    magnetization: np.ndarray
    magnetization_sq: np.ndarray
    populations: np.ndarray
    populations_sq: np.ndarray
    max_norm_drift: float


def qsd_step_size(model: LindbladModel, max_step: float | None = None) -> float:
    """
    Largest Euler-Maruyama step whose norm drift stays within tolerance:
    min(0.01/omega, 0.0079/||H||, 2.5e-4/||sum L^dagger L||, max_step).
    """
    step = QSD_MAX_STEP_OMEGA / model.omega
    hamiltonian_norm = model.hamiltonian_norm()
    if hamiltonian_norm > 0:
        step = min(step, QSD_MAX_STEP_HAMILTONIAN / hamiltonian_norm)
    if model.lindblad_ops:
        step = min(step, QSD_MAX_STEP_RATE / model.dissipation_norm())
    if max_step is not None:
        step = min(step, max_step)
    return step


def _initial_vector(model: LindbladModel, psi0: DickeState) -> np.ndarray:
    if model.representation is Representation.FULL:
        return symmetric_embed(psi0, model.spin.n_qubits)
    return np.array(psi0.amplitudes, dtype=complex)


def _magnetization_map(model: LindbladModel) -> np.ndarray:
    """Matrix sending |psi|^2 to m_z populations, shape (model dim, 2j+1)"""
    dimension = model.spin.dimension
    if model.representation is Representation.DICKE:
        return np.eye(dimension)
    counts = up_spin_counts(model.spin.n_qubits)
    mapping = np.zeros((model.dimension, dimension))
    mapping[np.arange(model.dimension), counts] = 1.0
    return mapping


class _TrajectoryBlock:
    """Integrates a block of trajectories side by side, one noise stream per trajectory"""

    def __init__(self, model: LindbladModel, times: np.ndarray, step: float):
        self._model = model
        self._times = times
        self._hamiltonian = model.hamiltonian.entries
        self._jumps = [op.entries for op in model.lindblad_ops]
        self._dissipation = model.dissipation_operator()
        self._substeps = [max(1, math.ceil((b - a) / step - 1e-12)) for a, b in zip(times[:-1], times[1:])]
        self._unitaries = (
            None
            if self._jumps
            else [propagator(model.hamiltonian, b - a).entries for a, b in zip(times[:-1], times[1:])]
        )

    @property
    def total_steps(self) -> int:
        return sum(self._substeps)

    def run(self, psi0: np.ndarray, seeds: list[np.random.SeedSequence]) -> tuple[np.ndarray, np.ndarray]:
        """
        :return: States of shape (block, T, dim) and the mean per-step norm
            drift of every trajectory.
        """
        block = len(seeds)
        psi = np.tile(psi0, (block, 1))
        states = np.empty((block, len(self._times), psi0.size), dtype=complex)
        states[:, 0] = psi

        if self._unitaries is not None:
            for index, unitary in enumerate(self._unitaries, start=1):
                psi = psi @ unitary.T
                states[:, index] = psi
            return states, np.zeros(block)

        generators = [np.random.default_rng(seed) for seed in seeds]
        noise = _NoiseStream(generators, len(self._jumps))
        drift_total = np.zeros(block)
        dissipation_t = self._dissipation.T
        hamiltonian_t = self._hamiltonian.T
        jumps_t = [jump.T for jump in self._jumps]

        for index, (start, stop) in enumerate(zip(self._times[:-1], self._times[1:]), start=1):
            substeps = self._substeps[index - 1]
            dt = (stop - start) / substeps
            for _ in range(substeps):
                increments = noise.next(dt)
                update = (-1j * (psi @ hamiltonian_t) - 0.5 * (psi @ dissipation_t)) * dt
                for k, jump_t in enumerate(jumps_t):
                    applied = psi @ jump_t
                    mean = np.einsum("bd,bd->b", psi.conj(), applied)
                    update += (
                        mean.conj()[:, None] * applied - 0.5 * (np.abs(mean) ** 2)[:, None] * psi
                    ) * dt
                    update += (applied - mean[:, None] * psi) * increments[:, k, None]
                psi = psi + update
                norm_sq = np.einsum("bd,bd->b", psi.conj(), psi).real
                drift_total += np.abs(norm_sq - 1.0)
                psi = psi / np.sqrt(norm_sq)[:, None]
            states[:, index] = psi

        return states, drift_total / max(1, self.total_steps)


class _NoiseStream:
    """Complex Wiener increments dxi = sqrt(dt) (n1 + i n2) / sqrt(2), drawn in chunks per trajectory"""

    def __init__(self, generators: list[np.random.Generator], channels: int):
        self._generators = generators
        self._channels = channels
        self._buffer = np.empty((len(generators), 0, channels), dtype=complex)
        self._cursor = 0

    def next(self, dt: float) -> np.ndarray:
        if self._cursor >= self._buffer.shape[1]:
            draws = np.stack(
                [rng.standard_normal((QSD_NOISE_CHUNK, self._channels, 2)) for rng in self._generators]
            )
            self._buffer = (draws[..., 0] + 1j * draws[..., 1]) / math.sqrt(2)
            self._cursor = 0
        increments = self._buffer[:, self._cursor] * math.sqrt(dt)
        self._cursor += 1
        return increments


def _check_stability(drifts: np.ndarray, step: float, offset: int = 0):
    worst = int(np.argmax(drifts))
    if drifts[worst] > Tolerances.NORM_DRIFT_PER_STEP:
        raise TrajectoryInstabilityError(
            f"Trajectory {offset + worst} drifts in norm by {drifts[worst]:.3e} per step "
            f"at step size {step:.3e}; reduce trajectories.max_step",
            norm_drift=float(drifts[worst]),
            step=step,
        )


def qsd_trajectory(
    model: LindbladModel,
    psi0: DickeState,
    time_grid: np.ndarray,
    seed: int,
    max_step: float | None = None,
) -> Trajectory:
    """
    One QSD trajectory in Ito form, renormalized every step.

    Drift per operator: <L^dagger> L - L^dagger L / 2 - <L^dagger><L> / 2;
    noise per operator: (L - <L>) dxi. Without Lindblad operators the
    trajectory is the exact Schrodinger evolution and ignores the seed.
    """
    times = np.asarray(time_grid, dtype=float)
    step = qsd_step_size(model, max_step)
    runner = _TrajectoryBlock(model, times, step)
    states, drifts = runner.run(_initial_vector(model, psi0), [np.random.SeedSequence(seed)])
    _check_stability(drifts, step)
    return Trajectory(times=times, states=states[0], seed=seed, mean_norm_drift=float(drifts[0]))


def ensemble_average(
    model: LindbladModel,
    psi0: DickeState,
    time_grid: np.ndarray,
    count: int,
    master_seed: int,
    max_step: float | None = None,
    threads: int = 1,
) -> TrajectoryEnsemble:
    """
    Average of `count` trajectories with per-time standard errors.

    Trajectory i draws its noise from SeedSequence(master_seed).spawn(count)[i].
    Trajectories run in fixed blocks of 256 and blocks are reduced in index
    order, so the result does not depend on the number of threads.
    """
    if count < 1:
        raise ValueError(f"Need at least one trajectory, got {count}")

    times = np.asarray(time_grid, dtype=float)
    if times.ndim != 1 or times.size == 0 or np.any(np.diff(times) <= 0):
        raise ValueError("Time grid must be a non-empty ascending sequence")

    step = qsd_step_size(model, max_step)
    runner = _TrajectoryBlock(model, times, step)
    psi_initial = _initial_vector(model, psi0)
    mapping = _magnetization_map(model)
    m_values = model.spin.m_values()
    seeds = np.random.SeedSequence(master_seed).spawn(count)
    blocks = [seeds[start : start + QSD_BLOCK_SIZE] for start in range(0, count, QSD_BLOCK_SIZE)]

    logger.info(
        f"Running {count} QSD trajectories for {model.describe()}: step {step:.3e}, "
        f"{runner.total_steps} steps each, {len(blocks)} blocks on {threads} thread(s)"
    )

    def run_block(indexed: tuple[int, list]) -> _BlockSums:
        offset, block_seeds = indexed
        states, drifts = runner.run(psi_initial, block_seeds)
        _check_stability(drifts, step, offset)
        populations = (np.abs(states) ** 2) @ mapping
        magnetization = populations @ m_values
        return _BlockSums(
            rho=np.einsum("btd,bte->tde", states, states.conj()),
            magnetization=magnetization.sum(axis=0),
            magnetization_sq=(magnetization**2).sum(axis=0),
            populations=populations.sum(axis=0),
            populations_sq=(populations**2).sum(axis=0),
            max_norm_drift=float(drifts.max()),
        )

    indexed_blocks = [(k * QSD_BLOCK_SIZE, block) for k, block in enumerate(blocks)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        results = list(executor.map(run_block, indexed_blocks))

    totals = results[0]
    for partial in results[1:]:
        totals.rho = totals.rho + partial.rho
        totals.magnetization = totals.magnetization + partial.magnetization
        totals.magnetization_sq = totals.magnetization_sq + partial.magnetization_sq
        totals.populations = totals.populations + partial.populations
        totals.populations_sq = totals.populations_sq + partial.populations_sq
        totals.max_norm_drift = max(totals.max_norm_drift, partial.max_norm_drift)

    states = tuple(
        DensityMatrix.from_array(psi0.spin, rho / count, representation=model.representation)
        for rho in totals.rho
    )
    return TrajectoryEnsemble(
        count=count,
        master_seed=master_seed,
        times=times,
        states=states,
        magnetization_mean=totals.magnetization / count,
        magnetization_stderr=_standard_error(totals.magnetization, totals.magnetization_sq, count),
        population_stderr=_standard_error(totals.populations, totals.populations_sq, count),
        max_norm_drift=totals.max_norm_drift,
    )


def _standard_error(total: np.ndarray, total_sq: np.ndarray, count: int) -> np.ndarray:
    if count < 2:
        return np.zeros_like(total)
    variance = (total_sq - total**2 / count) / (count - 1)
    return np.sqrt(np.clip(variance, 0.0, None) / count)
