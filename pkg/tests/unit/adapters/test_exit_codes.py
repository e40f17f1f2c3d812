import pytest

from src.adapters.input_adapters.cli.exit_codes import ExitCode, handle_exception
from src.shared.exceptions import (
    DecayFitError,
    PositivityViolationError,
    ScenarioNotFoundException,
    ScenarioValidationException,
    UseCaseException,
)


@pytest.mark.parametrize(
    "exc, code",
    [
        (ScenarioValidationException("bad", errors=["system.omega: Field required"]), ExitCode.INVALID),
        (ScenarioNotFoundException("missing"), ExitCode.INVALID),
        (DecayFitError("no decay"), ExitCode.INVALID),
        (UseCaseException("disk full"), ExitCode.INVALID),
        (ValueError("off lattice"), ExitCode.INVALID),
        (PositivityViolationError("negative", time=1.0, min_eigenvalue=-1e-3, step=0.1), ExitCode.NUMERICAL),
        (RuntimeError("boom"), ExitCode.UNEXPECTED),
    ],
)
def test_exception_maps_to_exit_code(exc, code):
    assert handle_exception(exc) is code
