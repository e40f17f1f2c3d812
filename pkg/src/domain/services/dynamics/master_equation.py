import time

import numpy as np
from loguru import logger
from scipy import linalg
from scipy.integrate import solve_ivp

from src.domain.entities import DensityMatrix, EvolutionDiagnostics, EvolutionResult, LindbladModel, Representation
from src.domain.services.spin_core import embed_density
from src.shared.constants import RK_ATOL, RK_RTOL, Tolerances
from src.shared.exceptions import (
    IntegrationFailedError,
    PositivityViolationError,
    TraceDriftError,
)

# Dormand-Prince evaluates the right-hand side six times per accepted step
_EVALUATIONS_PER_STEP = 6


def lindblad_rhs(model: LindbladModel):
    """
    d rho / dt = -i (H_eff rho - rho H_eff^dagger) + sum_k L_k rho L_k^dagger,
    with H_eff = H - (i/2) sum_k L_k^dagger L_k (the trace-preserving GKSL form).
    """
    dimension = model.dimension
    effective = model.effective_hamiltonian()
    effective_dagger = effective.conj().T
    jumps = [(op.entries, op.dagger) for op in model.lindblad_ops]

    def rhs(_t: float, y: np.ndarray) -> np.ndarray:
        rho = y.reshape(dimension, dimension)
        derivative = -1j * (effective @ rho - rho @ effective_dagger)
        for jump, jump_dagger in jumps:
            derivative += jump @ rho @ jump_dagger
        return derivative.ravel()

    return rhs


def _as_model_state(model: LindbladModel, rho0: DensityMatrix) -> DensityMatrix:
    if model.representation is Representation.FULL and rho0.is_dicke:
        return embed_density(rho0)
    if rho0.dimension != model.dimension:
        raise ValueError(
            f"Initial state has dimension {rho0.dimension}, model needs {model.dimension}"
        )
    return rho0


def integrate_master(
    model: LindbladModel,
    rho0: DensityMatrix,
    time_grid: np.ndarray,
    rtol: float = RK_RTOL,
    atol: float = RK_ATOL,
) -> EvolutionResult:
    """
    Integrate the master equation with the adaptive Dormand-Prince 4(5) pair.

    The trace is never renormalized; its drift is reported.

    :raises PositivityViolationError: when a stored state has an eigenvalue
        below -1e-6.
    :raises TraceDriftError: when the trace drifts by more than 1e-8.
    :raises IntegrationFailedError: when the solver stops early.
    """
    times = np.asarray(time_grid, dtype=float)
    if times.ndim != 1 or times.size == 0 or np.any(np.diff(times) <= 0):
        raise ValueError("Time grid must be a non-empty ascending sequence")

    rho0 = _as_model_state(model, rho0)
    dimension = model.dimension

    started = time.perf_counter()
    if times.size == 1:
        trajectory = rho0.entries.ravel()[:, None]
        evaluations = 0
    else:
        solution = solve_ivp(
            lindblad_rhs(model),
            t_span=(times[0], times[-1]),
            y0=np.array(rho0.entries, dtype=complex).ravel(),
            method="RK45",
            t_eval=times,
            rtol=rtol,
            atol=atol,
        )
        if not solution.success:
            raise IntegrationFailedError(f"Master equation solver failed: {solution.message}")
        trajectory = solution.y
        evaluations = solution.nfev

    step_count = max(1, (evaluations - 2) // _EVALUATIONS_PER_STEP) if evaluations else 0
    mean_step = (times[-1] - times[0]) / step_count if step_count else 0.0

    states = []
    max_drift = max_asymmetry = 0.0
    min_eigenvalue = np.inf
    for index, t in enumerate(times):
        entries = trajectory[:, index].reshape(dimension, dimension)
        max_asymmetry = max(max_asymmetry, float(np.max(np.abs(entries - entries.conj().T))))
        drift = abs(complex(np.trace(entries)) - 1.0)
        max_drift = max(max_drift, drift)

        hermitian = (entries + entries.conj().T) / 2
        lowest = float(linalg.eigvalsh(hermitian)[0])
        min_eigenvalue = min(min_eigenvalue, lowest)

        if lowest < Tolerances.POSITIVITY_ABORT:
            raise PositivityViolationError(
                f"Density matrix lost positivity at t = {t:.6g} (min eigenvalue "
                f"{lowest:.3e}) with mean step {mean_step:.3e}; tighten rtol/atol",
                time=float(t),
                min_eigenvalue=lowest,
                step=mean_step,
            )

        if drift > Tolerances.TRACE_DRIFT:
            raise TraceDriftError(
                f"Trace drifted by {drift:.3e} at t = {t:.6g}", drift=drift
            )

        states.append(
            DensityMatrix.from_array(
                rho0.spin,
                hermitian,
                representation=model.representation,
                positivity_tolerance=Tolerances.POSITIVITY_ABORT,
                trace_tolerance=Tolerances.TRACE_DRIFT,
            )
        )

    diagnostics = EvolutionDiagnostics(
        max_trace_drift=max_drift,
        max_hermiticity_error=max_asymmetry,
        min_eigenvalue=float(min_eigenvalue),
        step_count=step_count,
        step_size=mean_step,
    )
    logger.info(
        f"Integrated {model.describe()} over [{times[0]:g}, {times[-1]:g}] in "
        f"{time.perf_counter() - started:.2f}s: ~{step_count} steps, trace drift "
        f"{max_drift:.2e}, min eigenvalue {min_eigenvalue:.2e}"
    )
    return EvolutionResult(times=times, states=tuple(states), diagnostics=diagnostics)
