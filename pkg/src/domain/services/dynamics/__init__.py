from .decay_fit import fit_decay_rate, max_decay_law_error
from .lindblad_models import (
    build_closed_model,
    build_dephasing_model,
    build_thermal_model,
    dephasing_decay_rate,
)
from .magnetization import check_bins, magnetization_distribution, unit_width_bins
from .master_equation import integrate_master, lindblad_rhs
from .state_diffusion import Trajectory, ensemble_average, qsd_step_size, qsd_trajectory
from .toy_model import (
    lattice_steps,
    support_leakage,
    survival_closed_form,
    survival_recurrence,
    toy_evolve,
    toy_step,
    toy_survival_series,
)

__all__ = [
    "Trajectory",
    "build_closed_model",
    "build_dephasing_model",
    "build_thermal_model",
    "check_bins",
    "dephasing_decay_rate",
    "ensemble_average",
    "fit_decay_rate",
    "integrate_master",
    "lattice_steps",
    "lindblad_rhs",
    "magnetization_distribution",
    "max_decay_law_error",
    "qsd_step_size",
    "qsd_trajectory",
    "support_leakage",
    "survival_closed_form",
    "survival_recurrence",
    "toy_evolve",
    "toy_step",
    "toy_survival_series",
    "unit_width_bins",
]
