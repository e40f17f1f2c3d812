from .constants import CSV_FLOAT_FORMAT, OUTPUT_PATH, CsvColumns, Tolerances
from .exceptions import (
    DomainException,
    NumericalException,
    RepositoryException,
    ScenarioValidationException,
    UseCaseException,
)

__all__ = [
    "CsvColumns",
    "Tolerances",
    "CSV_FLOAT_FORMAT",
    "OUTPUT_PATH",
    "DomainException",
    "NumericalException",
    "RepositoryException",
    "ScenarioValidationException",
    "UseCaseException",
]
