from src.domain.services.macrorealism.continuity import (
    continuity_witness,
    slot_series_from_histograms,
    slot_series_from_partition,
)
from src.domain.services.macrorealism.mr_condition import EvolutionChannel, mr_condition_check
from src.domain.services.macrorealism.survival import (
    SurvivalFunction,
    log_time_pairs,
    multiplicativity_scan,
    survival_function,
    two_state_mr_check,
)

__all__ = [
    "EvolutionChannel",
    "SurvivalFunction",
    "continuity_witness",
    "log_time_pairs",
    "mr_condition_check",
    "multiplicativity_scan",
    "slot_series_from_histograms",
    "slot_series_from_partition",
    "survival_function",
    "two_state_mr_check",
]
