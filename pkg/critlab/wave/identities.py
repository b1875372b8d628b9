"""Executable checks linking the heat flow, the wave flow and range seminorms."""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from absl import logging
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field
from scipy.integrate import quad
from scipy.special import gamma

from ..guards import QuadratureError
from ..operators import ModelOperator
from ..semigroup import NotApplicableError, heat_norm
from ..spectral import SampledFunction, forward, require_operator, spectral_density
from ..special import wave_multiplier
from .decay import DecayCurve

TRANSMUTATION_TOL = 1e-4
SIGMA_POINTS = 32
INTERPOLATION_SLACK = 1e-6


def _relative_gap(a: np.ndarray, b: np.ndarray, weights: np.ndarray) -> float:
    scale = math.sqrt(float(np.sum(weights * np.abs(a) ** 2)))
    if scale == 0.0:
        return 0.0
    return math.sqrt(float(np.sum(weights * np.abs(a - b) ** 2))) / scale


def _transmuted(k: np.ndarray, t: float, spacing: float, sigma_max: float) -> np.ndarray:
    """½π^{-1/2}t^{-3/2} ∫_0^σmax σ e^{-σ²/4t} sin(σk)/k dσ per mode (trapezoid, even integrand)."""
    sigma = np.arange(1, int(math.ceil(sigma_max / spacing)) + 1) * spacing
    kernel = sigma * np.exp(-sigma * sigma / (4.0 * t))
    modes = wave_multiplier(sigma[:, None], k[None, :])
    return 0.5 / math.sqrt(math.pi) * t**-1.5 * spacing * (kernel @ modes)


def transmutation_check(
    op: ModelOperator,
    g: SampledFunction,
    t: float,
    sigma_max: Optional[float] = None,
    points_per_decade: int = SIGMA_POINTS,
    tolerance: float = TRANSMUTATION_TOL,
) -> float:
    """Relative gap between e^{-tS}g and ½π^{-1/2}t^{-3/2}∫σe^{-σ²/4t}W_S(σ)g dσ.

    The σ-integrand is even in σ and decays like a Gaussian, so a uniform
    trapezoid rule with spacing min(√t/n, π/(2K)) is spectrally accurate;
    the error is estimated by repeating the sum at twice the spacing.

    Args:
        op: Model operator.
        g: Data.
        t: Heat time, t > 0.
        sigma_max: Upper σ limit, at least 10√t (the default).
        points_per_decade: σ samples n per heat length √t, at least 8.
        tolerance: Target accuracy; estimates above 10× raise.

    Raises:
        ValueError: If t ≤ 0 or fewer than 8 points per √t.
        QuadratureError: If the σ-quadrature is underresolved.
    """
    require_operator(g, op)
    if not t > 0.0:
        raise ValueError(f"transmutation needs t > 0, got {t}")
    if points_per_decade < 8:
        raise ValueError(f"need at least 8 σ points per √t, got {points_per_decade}")
    if g.is_zero():
        return 0.0
    sigma_max = max(float(sigma_max or 0.0), 10.0 * math.sqrt(t))
    F = forward(g)
    k = F.grid.frequencies
    weights = F.engine.spectral_measure
    spacing = min(math.sqrt(t) / points_per_decade, math.pi / (2.0 * F.grid.band_limit))

    heat = np.exp(-t * k * k) * F.samples
    fine = _transmuted(k, t, spacing, sigma_max) * F.samples
    coarse = _transmuted(k, t, 2.0 * spacing, sigma_max) * F.samples
    estimate = _relative_gap(fine, coarse, weights)
    if estimate > 10.0 * tolerance:
        raise QuadratureError(
            f"σ-quadrature underresolved at t = {t}", estimate=estimate, tolerance=tolerance
        )
    return _relative_gap(heat, fine, weights)


class InterpolationResult(BaseModel):
    """Both sides of ‖g‖ ≤ 2^{1/2+α(1-2α)}|||S^{1/2}g|||_α^{2α}|||g|||_α^{1-2α}."""
    model_config = ConfigDict(frozen=True)

    alpha: float
    lhs: float = Field(description="‖g‖.")
    rhs: float
    ratio: float = Field(description="lhs / rhs, 0 for g = 0.")

    @property
    def satisfied(self) -> bool:
        return self.ratio <= 1.0 + INTERPOLATION_SLACK


def interpolation_check(op: ModelOperator, g: SampledFunction, alpha: float) -> InterpolationResult:
    """Evaluate the interpolation inequality between L² and R(S^α) for α ∈ (0, 1/2].

    At α = 1/2 the two sides agree: ‖g‖ = 2^{1/2}|||S^{1/2}g|||_{1/2}.

    Raises:
        ValueError: If α is outside (0, 1/2].
        NotApplicableError: If either seminorm diverges at this α.
    """
    require_operator(g, op)
    if not 0.0 < alpha <= 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2], got {alpha}")
    density = spectral_density(g)
    if density.is_zero():
        return InterpolationResult(alpha=alpha, lhs=0.0, rhs=0.0, ratio=0.0)

    constant = math.gamma(2.0 * alpha) * 2.0 ** (-2.0 * alpha)
    lifted = density.moment_integral(2.0 - 4.0 * alpha)
    # |||g|||_α enters with exponent 1 - 2α, which vanishes at α = 1/2
    plain = density.moment_integral(-4.0 * alpha) if alpha < 0.5 else 1.0
    if not (math.isfinite(lifted) and math.isfinite(plain)):
        raise NotApplicableError(f"seminorm diverges; not applicable at this alpha = {alpha}")
    lhs = math.sqrt(density.moment_integral(0.0))
    rhs = (
        2.0 ** (0.5 + alpha * (1.0 - 2.0 * alpha))
        * math.sqrt(constant * lifted) ** (2.0 * alpha)
        * math.sqrt(constant * plain) ** (1.0 - 2.0 * alpha)
    )
    return InterpolationResult(alpha=alpha, lhs=lhs, rhs=rhs, ratio=lhs / rhs)


class HeatBoundCheck(BaseModel):
    """Heat decay predicted from a wave bound: ‖e^{-tS}g‖ ≤ c(α*) C_g t^{-α*}."""
    model_config = ConfigDict(frozen=True)

    alpha_star: float
    wave_constant: float = Field(description="C_g = sup_t t^{2α*-1}‖W(t)g‖.")
    times: list[float]
    heat_norms: list[float]
    bounds: list[float]

    @property
    def holds(self) -> bool:
        return all(h <= b * (1.0 + 1e-8) for h, b in zip(self.heat_norms, self.bounds))

    @property
    def worst_ratio(self) -> float:
        return max((h / b for h, b in zip(self.heat_norms, self.bounds) if b > 0.0), default=0.0)


def heat_bound_from_wave(
    op: ModelOperator,
    g: SampledFunction,
    curve: DecayCurve,
    alpha_star: Optional[float] = None,
    t_grid: Optional[ArrayLike] = None,
) -> HeatBoundCheck:
    """Turn a wave growth bound into a heat decay bound through transmutation.

    C_g is the sup of t^{2α*-1}‖W(t)g‖ over the curve, raised to cover
    σ below the first time with ‖W(σ)g‖ ≤ σ‖g‖.
    """
    require_operator(g, op)
    alpha_star = curve.bounded_exponent() if alpha_star is None else float(alpha_star)
    if not 0.0 < alpha_star <= 0.5:
        raise ValueError(f"alpha_star must lie in (0, 1/2], got {alpha_star}")
    times = np.asarray(curve.times)
    norms = np.asarray(curve.norms)
    c_g = max(
        float(np.max(times ** (2.0 * alpha_star - 1.0) * norms)),
        times[0] ** (2.0 * alpha_star) * g.norm(),
    )
    t = times if t_grid is None else np.asarray(t_grid, dtype=float)
    factor = 2.0 ** (1.0 - 2.0 * alpha_star) / math.sqrt(math.pi) * gamma(1.5 - alpha_star)
    bounds = factor * c_g * t ** (-alpha_star)
    heat = np.atleast_1d(heat_norm(op, g, t))
    check = HeatBoundCheck(
        alpha_star=alpha_star,
        wave_constant=c_g,
        times=t.tolist(),
        heat_norms=heat.tolist(),
        bounds=bounds.tolist(),
    )
    if not check.holds:
        logging.warning("heat bound from wave violated for %s (worst ratio %.3g)", op.spec, check.worst_ratio)
    return check


def dissipation_check(op: ModelOperator, g: SampledFunction, t: float) -> float:
    """Relative gap in ‖g‖² - ‖e^{-tS}g‖² = 2∫_0^t ‖S^{1/2}e^{-τS}g‖² dτ on the grid."""
    require_operator(g, op)
    if not t > 0.0:
        raise ValueError(f"dissipation needs t > 0, got {t}")
    F = forward(g)
    k2 = F.grid.frequencies ** 2
    density = op.sphere_measure * F.engine.spectral_measure * np.abs(F.samples) ** 2
    lhs = float(np.sum(density * (1.0 - np.exp(-2.0 * t * k2))))
    if lhs == 0.0:
        return 0.0

    def rate(tau: float) -> float:
        return 2.0 * float(np.sum(density * k2 * np.exp(-2.0 * tau * k2)))

    rhs, _ = quad(rate, 0.0, t, limit=200, epsabs=0.0, epsrel=1e-12)
    return abs(lhs - rhs) / lhs


__all__ = [
    "SIGMA_POINTS",
    "TRANSMUTATION_TOL",
    "INTERPOLATION_SLACK",
    "transmutation_check",
    "InterpolationResult",
    "interpolation_check",
    "HeatBoundCheck",
    "heat_bound_from_wave",
    "dissipation_check",
]
