from .cache import PovmCache
from .grid import (
    check_resolution,
    default_grid,
    default_resolution,
    identity_residual,
    make_grid,
)
from .partitions import (
    band_partition,
    hemispheres,
    partition_from_rectangles,
    three_region,
    whole_sphere,
)
from .povm import build_povm, kraus_reduce, measured_mixture, mixture_deviation, principal_sqrt
from .q_distribution import coherent_table, q_at, q_distribution, q_values, slot_probabilities

__all__ = [
    "PovmCache",
    "band_partition",
    "build_povm",
    "check_resolution",
    "coherent_table",
    "default_grid",
    "default_resolution",
    "hemispheres",
    "identity_residual",
    "kraus_reduce",
    "make_grid",
    "measured_mixture",
    "mixture_deviation",
    "partition_from_rectangles",
    "principal_sqrt",
    "q_at",
    "q_distribution",
    "q_values",
    "slot_probabilities",
    "three_region",
    "whole_sphere",
]
