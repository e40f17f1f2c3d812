import math
from enum import Enum
from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeFloat,
    PositiveFloat,
    PositiveInt,
    field_validator,
    model_validator,
)

from src.domain.entities import Coupling, EnvironmentKind, OperatorScheme, Representation
from src.shared.constants import (
    DEFAULT_AUTO_PAIR_POINTS,
    DEFAULT_DELTA_TRANSFER,
    DEFAULT_EPS_MID,
    DEFAULT_MR_EPSILON,
    MAX_DICKE_QUBITS,
    MAX_FULL_SPACE_QUBITS,
)


class EngineKind(str, Enum):
    CLOSED = "closed"
    TOY = "toy"
    MASTER = "master"
    QSD = "qsd"


class StrictModel(BaseModel):
    """Scenario sections reject unknown keys and are immutable once parsed"""

    model_config = ConfigDict(extra="forbid", frozen=True)


class InitialStateSpec(StrictModel):
    kind: Literal["north", "south", "coherent"] = "north"
    theta: float | None = Field(None, ge=0.0, le=math.pi)
    phi: float | None = None

    @model_validator(mode="before")
    @classmethod
    def accept_shorthand(cls, data):
        if isinstance(data, str):
            return {"kind": data}
        return data

    @model_validator(mode="after")
    def check_angles(self):
        has_angles = self.theta is not None or self.phi is not None
        if self.kind == "coherent" and (self.theta is None or self.phi is None):
            raise ValueError("a coherent initial state needs theta and phi")
        if self.kind != "coherent" and has_angles:
            raise ValueError(f"theta/phi only apply to coherent states, not {self.kind!r}")
        return self


class SystemSpec(StrictModel):
    spin: PositiveFloat | None = None
    n_qubits: PositiveInt | None = None
    omega: PositiveFloat
    coupling: Coupling = Coupling.PRECESSION
    representation: Representation = Representation.DICKE
    initial_state: InitialStateSpec = InitialStateSpec()

    @field_validator("spin")
    @classmethod
    def check_half_integer(cls, v):
        if v is not None and not math.isclose(2 * v, round(2 * v), abs_tol=1e-12):
            raise ValueError(f"spin must be a multiple of 1/2, got {v}")
        return v

    @model_validator(mode="after")
    def check_size(self):
        if (self.spin is None) == (self.n_qubits is None):
            raise ValueError("give exactly one of spin or n_qubits")

        limit = MAX_FULL_SPACE_QUBITS if self.representation is Representation.FULL else MAX_DICKE_QUBITS
        if self.qubits > limit:
            raise ValueError(
                f"N = {self.qubits} exceeds the {self.representation.value} representation limit of {limit}"
            )
        return self

    @property
    def qubits(self) -> int:
        return self.n_qubits if self.n_qubits is not None else round(2 * self.spin)


class EnvironmentSpec(StrictModel):
    kind: EnvironmentKind = EnvironmentKind.NONE
    gamma_dp: PositiveFloat | None = None
    gamma_th: PositiveFloat | None = None
    n_bar: NonNegativeFloat | None = None
    operators: OperatorScheme = OperatorScheme.COLLECTIVE

    @model_validator(mode="after")
    def check_parameters(self):
        required = {
            EnvironmentKind.NONE: set(),
            EnvironmentKind.DEPHASING: {"gamma_dp"},
            EnvironmentKind.THERMAL: {"gamma_th", "n_bar"},
        }[self.kind]
        given = {name for name in ("gamma_dp", "gamma_th", "n_bar") if getattr(self, name) is not None}

        if missing := required - given:
            raise ValueError(f"{self.kind.value} environment needs {', '.join(sorted(missing))}")
        if extra := given - required:
            raise ValueError(f"{', '.join(sorted(extra))} do not apply to a {self.kind.value} environment")
        return self


class TimeGridSpec(StrictModel):
    start: NonNegativeFloat = 0.0
    stop: PositiveFloat
    points: int = Field(..., ge=2)
    snapshots: list[NonNegativeFloat] = []

    @model_validator(mode="after")
    def check_span(self):
        if self.stop <= self.start:
            raise ValueError(f"stop ({self.stop}) must exceed start ({self.start})")
        return self


class ToySpec(StrictModel):
    delta_t: PositiveFloat
    n_steps: PositiveInt
    snapshots: list[NonNegativeFloat] = []


class GridSpec(StrictModel):
    n_theta: int = Field(..., ge=8)
    n_phi: int = Field(..., ge=8)


class RectangleSpec(StrictModel):
    theta_lo: float = Field(..., ge=0.0, le=math.pi)
    theta_hi: float = Field(..., ge=0.0, le=math.pi)
    phi_lo: float = Field(0.0, ge=0.0, le=2 * math.pi)
    phi_hi: float = Field(2 * math.pi, ge=0.0, le=2 * math.pi)


class PartitionSpec(StrictModel):
    preset: Literal["whole", "hemispheres", "three_region", "bands"] | None = None
    band_width: PositiveFloat | None = None
    slots: dict[str, list[RectangleSpec]] | None = None
    coarse_graining_scale: PositiveFloat | None = None
    grid: GridSpec | None = None

    @model_validator(mode="after")
    def check_source(self):
        if (self.preset is None) == (self.slots is None):
            raise ValueError("give exactly one of preset or slots")
        if (self.preset == "bands") != (self.band_width is not None):
            raise ValueError("band_width goes with, and only with, the bands preset")
        return self


class BinsSpec(StrictModel):
    edges: list[float] | None = None
    unit_width: bool = True

    @model_validator(mode="after")
    def check_choice(self):
        if self.edges is not None and len(self.edges) < 2:
            raise ValueError("edges needs at least two values")
        if self.edges is None and not self.unit_width:
            raise ValueError("give edges or keep unit_width bins")
        return self


class TrajectoriesSpec(StrictModel):
    count: PositiveInt
    seed: int = Field(..., ge=0, lt=2**64)
    max_step: PositiveFloat | None = None


class MRCheckSpec(StrictModel):
    pairs: list[tuple[NonNegativeFloat, NonNegativeFloat]] | Literal["auto"] = "auto"
    epsilon: PositiveFloat = DEFAULT_MR_EPSILON
    auto_points: int = Field(DEFAULT_AUTO_PAIR_POINTS, ge=2)

    @field_validator("pairs")
    @classmethod
    def check_order(cls, v):
        if v == "auto":
            return v
        if not v:
            raise ValueError("pairs cannot be empty")
        for t_i, t_j in v:
            if t_i > t_j:
                raise ValueError(f"pair ({t_i}, {t_j}) needs t_i <= t_j")
        return v


class ContinuitySpec(StrictModel):
    source: Literal["histogram", "partition"] = "histogram"
    eps_mid: float = Field(DEFAULT_EPS_MID, gt=0.0, lt=1.0)
    delta_transfer: float = Field(DEFAULT_DELTA_TRANSFER, gt=0.0, le=1.0)


class AnalysisSpec(StrictModel):
    decay_fit: bool = False
    multiplicativity: bool = False
    mr_check: MRCheckSpec | None = None
    continuity: ContinuitySpec | None = None


class OutputsSpec(StrictModel):
    histogram: str = "histogram.csv"
    survival: str = "survival.csv"
    analysis: str = "analysis.json"
    record: str = "run_record.json"

    @field_validator("histogram", "survival", "analysis", "record")
    @classmethod
    def plain_file_name(cls, v):
        if not v or "/" in v or "\\" in v or v in (".", ".."):
            raise ValueError(f"{v!r} is not a plain file name")
        return v

    @model_validator(mode="after")
    def distinct_names(self):
        names = [self.histogram, self.survival, self.analysis, self.record]
        if len(set(names)) != len(names):
            raise ValueError("output file names must be distinct")
        return self


class Scenario(StrictModel):
    """One experiment: system, environment, engine, time axis and the analyses to run"""

    name: str = Field(..., pattern=r"^[a-z0-9][a-z0-9_]*$")
    description: str = ""
    engine: EngineKind
    system: SystemSpec
    environment: EnvironmentSpec = EnvironmentSpec()
    time_grid: TimeGridSpec | None = None
    toy: ToySpec | None = None
    partition: PartitionSpec | None = None
    bins: BinsSpec = BinsSpec()
    trajectories: TrajectoriesSpec | None = None
    analysis: AnalysisSpec = AnalysisSpec()
    outputs: OutputsSpec = OutputsSpec()

    @model_validator(mode="after")
    def check_engine(self):
        is_toy = self.engine is EngineKind.TOY
        if is_toy != (self.toy is not None):
            raise ValueError("the toy section is required for, and only for, the toy engine")
        if is_toy == (self.time_grid is not None):
            raise ValueError("time_grid is required for every engine except toy, which steps on its own lattice")

        if self.engine in (EngineKind.TOY, EngineKind.CLOSED) and self.environment.kind is not EnvironmentKind.NONE:
            raise ValueError(f"the {self.engine.value} engine needs environment kind none")

        if is_toy:
            if self.system.representation is not Representation.DICKE:
                raise ValueError("the toy engine runs in the dicke representation")
            if self.system.initial_state.kind == "coherent":
                raise ValueError("the toy engine starts from north or south")

        if (self.engine is EngineKind.QSD) != (self.trajectories is not None):
            raise ValueError("the trajectories section is required for, and only for, the qsd engine")

        if (
            self.environment.operators is OperatorScheme.LOCAL
            and self.system.representation is not Representation.FULL
        ):
            raise ValueError("local Lindblad operators need the full representation")
        return self

    @model_validator(mode="after")
    def check_analysis(self):
        mr_check = self.analysis.mr_check
        if mr_check is not None:
            if self.engine is EngineKind.QSD:
                raise ValueError("mr_check needs a closed, toy or master channel")
            if self.system.representation is not Representation.DICKE:
                raise ValueError("mr_check runs in the dicke representation")
            if self.partition is None:
                raise ValueError("mr_check needs a partition")
            if mr_check.pairs == "auto" and self.engine is EngineKind.CLOSED:
                raise ValueError("automatic pairs need a decay rate; give explicit pairs for the closed engine")

        continuity = self.analysis.continuity
        if continuity is not None and continuity.source == "partition" and self.partition is None:
            raise ValueError("continuity from a partition needs a partition")
        return self

    @property
    def snapshots(self) -> list[float]:
        section = self.toy if self.engine is EngineKind.TOY else self.time_grid
        return list(section.snapshots)
