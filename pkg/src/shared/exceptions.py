"""Domain, numerical, repository and application exceptions"""


class DomainException(Exception):
    """Base exception for domain errors"""

    pass


class InvalidStateError(DomainException):
    """Raised when a state or operator violates its invariants"""

    pass


class SubspaceLeakageError(DomainException):
    """Raised when a full-space state carries weight outside the symmetric subspace"""

    def __init__(self, message: str, leakage: float):
        super().__init__(message)
        self.leakage = leakage


class SupportLeakageError(DomainException):
    """Raised when the toy model is fed a state outside span{|+j>, |-j>}"""

    def __init__(self, message: str, leakage: float):
        super().__init__(message)
        self.leakage = leakage


class GridResolutionError(DomainException):
    """Raised when a sphere grid is too coarse for the requested spin"""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class PartitionError(DomainException):
    """Raised when slot regions overlap or leave part of the sphere uncovered"""

    pass


class UnreachableOutcomeError(DomainException):
    """Raised when a measurement outcome has (numerically) zero probability"""

    def __init__(self, message: str, slot: int, probability: float):
        super().__init__(message)
        self.slot = slot
        self.probability = probability


class DecayFitError(DomainException):
    """Raised when a survival series cannot be fitted by an exponential decay"""

    pass


class SurvivalRangeError(DomainException):
    """Raised when a survival function leaves the admissible range [-1, 1]"""

    pass


class NumericalException(Exception):
    """Base exception for numerical failures during evolution"""

    pass


class PositivityViolationError(NumericalException):
    """Raised when an integrated density matrix loses positivity"""

    def __init__(self, message: str, time: float, min_eigenvalue: float, step: float):
        super().__init__(message)
        self.time = time
        self.min_eigenvalue = min_eigenvalue
        self.step = step


class TraceDriftError(NumericalException):
    """Raised when the integrated trace drifts beyond tolerance"""

    def __init__(self, message: str, drift: float):
        super().__init__(message)
        self.drift = drift


class TrajectoryInstabilityError(NumericalException):
    """Raised when stochastic trajectories drift in norm faster than allowed"""

    def __init__(self, message: str, norm_drift: float, step: float):
        super().__init__(message)
        self.norm_drift = norm_drift
        self.step = step


class IntegrationFailedError(NumericalException):
    """Raised when the ODE solver gives up"""

    pass


class RepositoryException(Exception):
    """Base exception for repository errors"""

    pass


class ScenarioNotFoundException(RepositoryException):
    """Raised when a scenario name or path cannot be resolved"""

    pass


class ScenarioParseException(RepositoryException):
    """Raised when a scenario file is not valid YAML"""

    pass


class ApplicationException(Exception):
    """Base exception for application layer errors"""

    pass


class ScenarioValidationException(ApplicationException):
    """Raised when a scenario fails schema or cross-field validation"""

    def __init__(self, message: str, errors: list[str] | None = None):
        super().__init__(message)
        self.errors = errors or []


class UseCaseException(ApplicationException):
    """Raised when use case execution fails"""

    pass
