"""Spectral wave propagation w'' + Sw = 0 with data (w, w_t)(0) = (u0, g).

Per mode: ŵ(k, t) = sin(tk)/k · ĝ(k) + cos(tk) û0(k), exact for every t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import quad

from ..operators import ModelOperator
from ..special import wave_multiplier
from ..spectral import (
    ProfileSpline,
    SampledFunction,
    SpectralFunction,
    TransformEngine,
    forward,
    require_operator,
)

QUAD_LIMIT = 2000


@dataclass(frozen=True, eq=False)
class WaveState:
    """Spectral snapshot (ŵ(t), ∂_t ŵ(t)) of a wave solution at time t."""
    engine: TransformEngine
    displacement: NDArray
    velocity: NDArray
    time: float

    def __post_init__(self) -> None:
        for name in ("displacement", "velocity"):
            values = np.array(getattr(self, name))
            values.setflags(write=False)
            object.__setattr__(self, name, values)

    @property
    def op(self) -> ModelOperator:
        return self.engine.op

    def displacement_function(self) -> SpectralFunction:
        return SpectralFunction(self.engine, self.displacement)

    def velocity_function(self) -> SpectralFunction:
        return SpectralFunction(self.engine, self.velocity)


def propagate(F: SpectralFunction, t: float, u0: Optional[SpectralFunction] = None) -> WaveState:
    """Wave state at time t from spectral data ĝ (velocity) and optional û0 (displacement)."""
    if not t >= 0.0:
        raise ValueError(f"wave time must be nonnegative, got {t}")
    k = F.grid.frequencies
    displacement = wave_multiplier(t, k) * F.samples
    velocity = np.cos(t * k) * F.samples
    if u0 is not None:
        displacement = displacement + np.cos(t * k) * u0.samples
        velocity = velocity - k * np.sin(t * k) * u0.samples
    return WaveState(F.engine, displacement, velocity, float(t))


def wave_evolve(
    op: ModelOperator,
    g: SampledFunction,
    t: float,
    initial_displacement: Optional[SampledFunction] = None,
) -> WaveState:
    """W_S(t)g = sin(tS^{1/2})S^{-1/2}g together with its time derivative.

    Raises:
        ValueError: If t < 0.
        GridMismatchError: If ``g`` was built for another operator.
    """
    require_operator(g, op)
    u0 = None
    if initial_displacement is not None:
        require_operator(initial_displacement, op)
        u0 = forward(initial_displacement)
    return propagate(forward(g), t, u0)


def energy(state: WaveState) -> float:
    """‖∂_t w‖² + ‖S^{1/2} w‖² as the spectral sum of |∂_t ŵ|² + k²|ŵ|²."""
    engine = state.engine
    k = engine.spectral.frequencies
    density = np.abs(state.velocity) ** 2 + k * k * np.abs(state.displacement) ** 2
    return float(state.op.sphere_measure * np.sum(engine.spectral_measure * density))


def wave_norm_grid(state: WaveState) -> float:
    """Grid L² norm of the displacement."""
    return state.displacement_function().norm()


def _regular_part(spline: ProfileSpline, t: float, upper: float) -> float:
    def integrand(k: float) -> float:
        return float(wave_multiplier(t, k) ** 2 * spline.chi_squared(k) * k**spline.exponent)

    value, _ = quad(integrand, 0.0, upper, limit=QUAD_LIMIT)
    return value


def _oscillatory_part(spline: ProfileSpline, t: float, lower: float) -> float:
    upper = spline.band_limit
    if lower >= upper:
        return 0.0

    def phi(k: float) -> float:
        return float(spline.chi_squared(k) * k ** (spline.exponent - 2.0))

    mean, _ = quad(phi, lower, upper, limit=QUAD_LIMIT)
    oscillation, _ = quad(phi, lower, upper, weight="cos", wvar=2.0 * t, limit=QUAD_LIMIT)
    return 0.5 * (mean - oscillation)


def wave_norm(op: ModelOperator, g: SampledFunction, t: float, spline: Optional[ProfileSpline] = None) -> float:
    """Whole-space ‖W_S(t)g‖ from the spline of the even profile χ = ĝ/k^ν.

    On [0, min(K, 1/t)] the integrand (sin(tk)/k)² χ² k^e is smooth; above it
    sin² is split into ½(1 - cos 2tk) and the cosine part is integrated with
    an oscillatory rule.
    """
    require_operator(g, op)
    if not t >= 0.0:
        raise ValueError(f"wave time must be nonnegative, got {t}")
    if t == 0.0 or g.is_zero():
        return 0.0
    spline = spline or ProfileSpline(g)
    split = min(spline.band_limit, 1.0 / t)
    total = _regular_part(spline, t, split) + _oscillatory_part(spline, t, split)
    return math.sqrt(max(op.sphere_measure * total, 0.0))


__all__ = [
    "WaveState",
    "propagate",
    "wave_evolve",
    "energy",
    "wave_norm_grid",
    "wave_norm",
]
