import math


class CsvColumns:
    """Fixed column orders for the tabular outputs"""

    TIME = "time"
    BIN_LO = "bin_lo"
    BIN_HI = "bin_hi"
    PROBABILITY = "probability"
    SURVIVAL = "A"

    HISTOGRAM = (TIME, BIN_LO, BIN_HI, PROBABILITY)
    SURVIVAL_SERIES = (TIME, SURVIVAL)


class Tolerances:
    """Numerical tolerances shared by the domain services"""

    STATE_NORM = 1e-12
    HERMITIAN = 1e-12
    TRACE = 1e-10
    MIN_EIGENVALUE = -1e-9
    UNITARY = 1e-10
    GRID_WEIGHT_SUM = 1e-10
    IDENTITY_RESOLUTION = 1e-8
    POVM_COMPLETENESS = 1e-8
    POVM_POSITIVITY = 1e-9
    Q_NEGATIVITY = -1e-12
    OUTCOME_PROBABILITY = 1e-12
    SUPPORT_LEAKAGE = 1e-10
    SUBSPACE_LEAKAGE = 1e-8
    TRACE_DRIFT = 1e-8
    POSITIVITY_ABORT = -1e-6
    NORM_DRIFT_PER_STEP = 1e-3
    ROW_SUM = 1e-8


# Dense feasibility bounds
MAX_FULL_SPACE_QUBITS = 12
MAX_DICKE_QUBITS = 20

# Toy model validity window for omega * delta_t
TOY_ZENO_LIMIT = 0.05
TOY_TIMESCALE_LIMIT = 1.0

# Coarse-graining
COARSE_GRAINING_WARNING = 3.0
THREE_REGION_NORTH = math.pi / 3
THREE_REGION_SOUTH = 2 * math.pi / 3
MIN_GRID_NODES = 64
GRID_NODES_PER_LEVEL = 8

# Macrorealism and continuity defaults
DEFAULT_MR_EPSILON = 0.02
DEFAULT_EPS_MID = 0.05
DEFAULT_DELTA_TRANSFER = 0.1
CONTINUITY_MAX_STEP = 0.1
DEFAULT_AUTO_PAIR_POINTS = 6

# Decay fit
MIN_FIT_POINTS = 5

# Master equation integrator
RK_RTOL = 1e-10
RK_ATOL = 1e-12

# Stochastic integration. The step caps keep the per-step norm drift of an
# Euler-Maruyama step below NORM_DRIFT_PER_STEP: the dissipative part drifts by
# about dt * ||sum L^dagger L||, the Hamiltonian part by (dt * ||H||)^2.
QSD_MAX_STEP_OMEGA = 0.01
QSD_MAX_STEP_RATE = Tolerances.NORM_DRIFT_PER_STEP / 4
QSD_MAX_STEP_HAMILTONIAN = math.sqrt(Tolerances.NORM_DRIFT_PER_STEP) / 4
QSD_BLOCK_SIZE = 256
QSD_NOISE_CHUNK = 1024

# Output formatting
CSV_FLOAT_FORMAT = "%.17g"
OUTPUT_PATH = "./output"
