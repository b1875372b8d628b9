"""The heat semigroup e^{-tS} as the spectral multiplier e^{-tk²}."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..guards import ResolutionExhaustedError
from ..operators import ModelOperator
from ..spectral import (
    SampledFunction,
    apply_multiplier,
    forward,
    inverse,
    require_operator,
    spectral_density,
)

UNDERFLOW = 1e-14


def heat_evolve(op: ModelOperator, g: SampledFunction, t: float) -> SampledFunction:
    """e^{-tS} g on the grid of ``g``.

    Raises:
        ValueError: If t < 0.
        GridMismatchError: If ``g`` was built for another operator.
    """
    require_operator(g, op)
    if not t >= 0.0:
        raise ValueError(f"heat time must be nonnegative, got {t}")
    if t == 0.0:
        return g
    return inverse(apply_multiplier(forward(g), lambda k: np.exp(-t * k * k)))


def heat_norm(op: ModelOperator, g: SampledFunction, t: ArrayLike) -> float | NDArray[np.float64]:
    """Whole-space ‖e^{-tS} g‖_{L²} from the continuum spectral density."""
    require_operator(g, op)
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0.0):
        raise ValueError("heat time must be nonnegative")
    norms = np.sqrt(np.maximum(spectral_density(g).heat_norms_squared(t_arr), 0.0))
    if t_arr.ndim == 0:
        return float(norms[0])
    return norms


def heat_decay_rate(op: ModelOperator, g: SampledFunction, t_grid: ArrayLike) -> float:
    """Exponent σ of ‖e^{-tS}g‖ ≍ t^{-σ}, fitted over the last decade of ``t_grid``.

    Raises:
        ValueError: If the grid spans fewer than two decades.
        ResolutionExhaustedError: If every norm is below 1e-14.
    """
    t = np.sort(np.asarray(t_grid, dtype=float))
    if t.size < 3 or t[0] <= 0.0 or math.log10(t[-1] / t[0]) < 2.0 - 1e-9:
        raise ValueError("t_grid must be positive and span at least two decades")
    norms = np.atleast_1d(heat_norm(op, g, t))
    if np.all(norms < UNDERFLOW):
        raise ResolutionExhaustedError("resolution exhausted: all heat norms are below 1e-14")
    window = (t >= t[-1] / 10.0) & (norms >= UNDERFLOW)
    if window.sum() < 2:
        raise ResolutionExhaustedError("resolution exhausted in the last decade of t_grid")
    slope, _ = np.polyfit(np.log(t[window]), np.log(norms[window]), 1)
    return float(-slope)


__all__ = ["heat_evolve", "heat_norm", "heat_decay_rate"]
