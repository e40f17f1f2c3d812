from .lindblad_model import Coupling, EnvironmentKind, LindbladModel, OperatorScheme
from .quantum_state import (
    CollectiveOperator,
    DensityMatrix,
    DickeState,
    OperatorLabel,
    Representation,
)
from .reports import ContinuityReport, DecayFit, MRReport, PairDistance
from .sphere import PovmSet, QDistribution, Slot, SlotPartition, SlotRectangle, SphereGrid
from .time_series import (
    EvolutionDiagnostics,
    EvolutionResult,
    MagnetizationHistogram,
    SlotTimeSeries,
    SurvivalSeries,
    TrajectoryEnsemble,
)

__all__ = [
    "CollectiveOperator",
    "ContinuityReport",
    "Coupling",
    "DecayFit",
    "DensityMatrix",
    "DickeState",
    "EnvironmentKind",
    "EvolutionDiagnostics",
    "EvolutionResult",
    "LindbladModel",
    "MRReport",
    "MagnetizationHistogram",
    "OperatorLabel",
    "OperatorScheme",
    "PairDistance",
    "PovmSet",
    "QDistribution",
    "Representation",
    "Slot",
    "SlotPartition",
    "SlotRectangle",
    "SlotTimeSeries",
    "SphereGrid",
    "SurvivalSeries",
    "TrajectoryEnsemble",
]
