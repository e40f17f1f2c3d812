import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SphericalAngle:
    """Direction on the unit sphere; theta from the north pole"""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")

        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi}")

    @classmethod
    def wrapped(cls, theta: float, phi: float) -> "SphericalAngle":
        return cls(theta=float(theta), phi=float(phi) % (2 * math.pi))

    @classmethod
    def north(cls) -> "SphericalAngle":
        return cls(0.0, 0.0)

    @classmethod
    def south(cls) -> "SphericalAngle":
        return cls(math.pi, 0.0)

    def unit_vector(self) -> np.ndarray:
        return np.array(
            [
                math.sin(self.theta) * math.cos(self.phi),
                math.sin(self.theta) * math.sin(self.phi),
                math.cos(self.theta),
            ]
        )

    def angle_to(self, other: "SphericalAngle") -> float:
        cosine = float(np.dot(self.unit_vector(), other.unit_vector()))
        return math.acos(min(1.0, max(-1.0, cosine)))
