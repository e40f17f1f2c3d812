from dataclasses import dataclass, field


@dataclass(frozen=True)
class PairDistance:
    t_i: float
    t_j: float
    delta: float
    skipped_slots: tuple[str, ...] = ()

    def __post_init__(self):
        if self.t_i > self.t_j:
            raise ValueError(f"Pair requires t_i <= t_j, got ({self.t_i}, {self.t_j})")

        if not -1e-12 <= self.delta <= 1 + 1e-12:
            raise ValueError(f"Total-variation distance must lie in [0, 1], got {self.delta}")

    def to_dict(self) -> dict:
        return {"t_i": self.t_i, "t_j": self.t_j, "delta": self.delta}


@dataclass(frozen=True)
class MRReport:
    """Macrorealism check: the measured-then-evolved mixture against unmeasured evolution"""

    pairs: tuple[PairDistance, ...]
    epsilon: float

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")

    @property
    def max_delta(self) -> float:
        return max((pair.delta for pair in self.pairs), default=0.0)

    def pair_verdicts(self) -> list[bool]:
        return [pair.delta <= self.epsilon for pair in self.pairs]

    @property
    def satisfied(self) -> bool:
        return self.max_delta <= self.epsilon

    @property
    def verdict(self) -> str:
        return "satisfied" if self.satisfied else "violated"

    def to_dict(self) -> dict:
        return {
            "pairs": [pair.to_dict() for pair in self.pairs],
            "epsilon": self.epsilon,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class ContinuityReport:
    """Witness for probability reaching the south slot without crossing the middle slots"""

    witness: float
    eps_mid: float
    delta_transfer: float
    violation_time: float | None = None
    reliable: bool = True
    max_step_omega: float | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.witness < 0:
            raise ValueError(f"Witness cannot be negative, got {self.witness}")

        if (self.violation_time is not None) != self.violation:
            raise ValueError("A violation time is reported exactly when W >= delta_transfer")

    @property
    def violation(self) -> bool:
        return self.witness >= self.delta_transfer

    def to_dict(self) -> dict:
        return {
            "witness": self.witness,
            "eps_mid": self.eps_mid,
            "delta_transfer": self.delta_transfer,
            "violation_time": self.violation_time,
        }


@dataclass(frozen=True)
class DecayFit:
    """Least-squares fit of log(2A - 1) = intercept - nu t"""

    nu: float
    intercept: float
    rms_residual: float
    max_residual: float
    n_points: int

    def to_dict(self) -> dict:
        return {
            "nu": self.nu,
            "intercept": self.intercept,
            "rms_residual": self.rms_residual,
            "max_residual": self.max_residual,
            "n_points": self.n_points,
        }
