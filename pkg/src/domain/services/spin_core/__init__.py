from .coherent_states import coherent_amplitudes, coherent_overlap_law, make_coherent_state
from .hamiltonians import (
    build_dicke_hamiltonian,
    build_nonclassical_hamiltonian,
    build_product_hamiltonian,
    effective_precession_rate,
)
from .operators import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_Z,
    SpinOperators,
    build_spin_operators,
    collective_sum,
    local_operator,
    magnetization_operator,
    permutation_operator,
)
from .propagation import closed_form_propagator, evolve_density, evolve_state, propagator
from .symmetric_subspace import (
    dicke_project,
    embed_density,
    embedding_matrix,
    restrict_operator,
    symmetric_embed,
)

__all__ = [
    "SIGMA_MINUS",
    "SIGMA_PLUS",
    "SIGMA_Z",
    "SpinOperators",
    "build_dicke_hamiltonian",
    "build_nonclassical_hamiltonian",
    "build_product_hamiltonian",
    "build_spin_operators",
    "closed_form_propagator",
    "coherent_amplitudes",
    "coherent_overlap_law",
    "collective_sum",
    "dicke_project",
    "effective_precession_rate",
    "embed_density",
    "embedding_matrix",
    "evolve_density",
    "evolve_state",
    "local_operator",
    "magnetization_operator",
    "make_coherent_state",
    "permutation_operator",
    "propagator",
    "restrict_operator",
    "symmetric_embed",
]
