from enum import IntEnum

from loguru import logger

from src.shared.exceptions import (
    ApplicationException,
    DomainException,
    NumericalException,
    RepositoryException,
    ScenarioValidationException,
)


class ExitCode(IntEnum):
    OK = 0
    UNEXPECTED = 1
    INVALID = 2
    NUMERICAL = 3


def handle_exception(exc: Exception) -> ExitCode:
    """Log a failure and map it to the process exit status"""

    if isinstance(exc, ScenarioValidationException):
        logger.error(f"Validation error: {str(exc)}")
        for error in exc.errors:
            logger.error(f"  {error}")
        return ExitCode.INVALID

    if isinstance(exc, NumericalException):
        logger.error(f"Numerical failure: {str(exc)}")
        return ExitCode.NUMERICAL

    if isinstance(exc, (DomainException, RepositoryException, ApplicationException, ValueError)):
        logger.error(f"{type(exc).__name__}: {str(exc)}")
        return ExitCode.INVALID

    logger.exception(f"Unexpected error: {str(exc)}")
    return ExitCode.UNEXPECTED
