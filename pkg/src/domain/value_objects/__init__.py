from .spherical_angle import SphericalAngle
from .spin_quantum_number import SpinQuantumNumber
from .toy_model_params import ToyModelParams

__all__ = ["SpinQuantumNumber", "SphericalAngle", "ToyModelParams"]
