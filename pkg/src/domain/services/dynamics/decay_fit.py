import numpy as np
from loguru import logger

from src.domain.entities import DecayFit, SurvivalSeries
from src.shared.constants import MIN_FIT_POINTS
from src.shared.exceptions import DecayFitError

_MONOTONE_SLACK = 1e-12


def fit_decay_rate(series: SurvivalSeries) -> DecayFit:
    """
    Fit A(t) = (1 + exp(-nu t)) / 2 by least squares on log(2A - 1).

    :raises DecayFitError: for fewer than five points, values at or below
        1/2, a series that increases anywhere, or a non-positive rate.
    """
    if len(series) < MIN_FIT_POINTS:
        raise DecayFitError(
            f"Decay fit needs at least {MIN_FIT_POINTS} points, got {len(series)}"
        )

    values = series.values
    if np.any(values <= 0.5):
        first = int(np.argmax(values <= 0.5))
        raise DecayFitError(
            f"A(t) = {values[first]:.6g} at t = {series.times[first]:.6g} is not above 1/2; "
            "the survival law is not an exponential decay"
        )

    if np.any(np.diff(values) > _MONOTONE_SLACK):
        first = int(np.argmax(np.diff(values) > _MONOTONE_SLACK)) + 1
        raise DecayFitError(
            f"A(t) increases at t = {series.times[first]:.6g}; a monotone decay is required"
        )

    log_contrast = np.log(2 * values - 1)
    slope, intercept = np.polyfit(series.times, log_contrast, 1)
    nu = -float(slope)
    if nu <= 0:
        raise DecayFitError(f"Fitted rate nu = {nu:.3e} is not positive; A(t) does not decay")

    residuals = log_contrast - (intercept + slope * series.times)
    fit = DecayFit(
        nu=nu,
        intercept=float(intercept),
        rms_residual=float(np.sqrt(np.mean(residuals**2))),
        max_residual=float(np.max(np.abs(residuals))),
        n_points=len(series),
    )
    logger.info(f"Fitted decay rate nu = {fit.nu:.6g} (rms residual {fit.rms_residual:.2e})")
    return fit


def max_decay_law_error(series: SurvivalSeries, nu: float, t_max: float | None = None) -> float:
    """max over t <= t_max of |A(t) - (1 + exp(-nu t)) / 2|"""
    mask = np.ones(len(series), dtype=bool) if t_max is None else series.times <= t_max
    law = 0.5 * (1 + np.exp(-nu * series.times[mask]))
    return float(np.max(np.abs(series.values[mask] - law)))
