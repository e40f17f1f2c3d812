from collections.abc import Sequence

import numpy as np

from src.domain.entities import DensityMatrix, EvolutionDiagnostics


def state_diagnostics(
    states: Sequence[DensityMatrix],
    step_count: int = 0,
    step_size: float = 0.0,
    max_norm_drift: float = 0.0,
) -> EvolutionDiagnostics:
    """Trace drift, Hermiticity and positivity over a sequence of stored states"""
    drifts, asymmetries, eigenvalues = [], [], []
    for state in states:
        entries = state.entries
        drifts.append(abs(complex(np.trace(entries)) - 1.0))
        asymmetries.append(float(np.max(np.abs(entries - entries.conj().T))))
        eigenvalues.append(state.min_eigenvalue())

    return EvolutionDiagnostics(
        max_trace_drift=max(drifts),
        max_hermiticity_error=max(asymmetries),
        min_eigenvalue=min(eigenvalues),
        step_count=step_count,
        step_size=step_size,
        max_norm_drift=max_norm_drift,
    )
