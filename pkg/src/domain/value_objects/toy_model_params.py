import math
from dataclasses import dataclass

from src.shared.constants import TOY_TIMESCALE_LIMIT, TOY_ZENO_LIMIT


@dataclass(frozen=True)
class ToyModelParams:
    """Stepwise dephasing model: free evolution for delta_t, then pointer-basis decoherence"""

    omega: float
    delta_t: float
    n_steps: int = 0

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")

        if self.delta_t <= 0:
            raise ValueError(f"delta_t must be positive, got {self.delta_t}")

        if self.n_steps < 0:
            raise ValueError(f"n_steps cannot be negative, got {self.n_steps}")

    @property
    def phase(self) -> float:
        return self.omega * self.delta_t

    @property
    def c(self) -> float:
        return math.cos(self.phase) ** 2

    @property
    def small_step_rate(self) -> float:
        """Small-step estimate 2 sin^2(omega dt) / dt"""
        return 2 * math.sin(self.phase) ** 2 / self.delta_t

    @property
    def exact_rate(self) -> float:
        """Rate of the lattice law a_n = cos(2 omega dt)^n; inf when the law is not a decay"""
        base = math.cos(2 * self.phase)
        if base <= 0:
            return math.inf
        return -math.log(base) / self.delta_t

    def validity_warnings(self) -> list[str]:
        warnings = []
        if self.phase < TOY_ZENO_LIMIT:
            warnings.append(
                f"Zeno regime: omega*delta_t = {self.phase:.4g} < {TOY_ZENO_LIMIT} "
                "freezes the initial state"
            )
        if self.phase > TOY_TIMESCALE_LIMIT:
            warnings.append(
                f"omega*delta_t = {self.phase:.4g} > {TOY_TIMESCALE_LIMIT}: step exceeds "
                "the dynamical timescale"
            )
        return warnings

    def times(self) -> list[float]:
        return [n * self.delta_t for n in range(self.n_steps + 1)]
