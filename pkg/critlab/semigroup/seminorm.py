"""The range seminorm |||g|||_{R(S^α)}, computed in time and in frequency.

Time method:
    |||g|||² = ∫_0^∞ t^{2α-1} ‖e^{-tS}g‖² dt, trapezoid rule in log t on
    [t_min, t_max], exact head on [0, t_min] and a power-law tail.

Frequency method:
    exchanging the integrals with ∫_0^∞ t^{2α-1} e^{-2tk²} dt = Γ(2α)(2k²)^{-2α}
    gives |||g|||² = Γ(2α) 2^{-2α} ω ∫ k^{-4α} ρ(k) dk, finite iff the small-k
    exponent q of ρ satisfies q - 4α + 1 > 0.
"""

from __future__ import annotations

import math

import numpy as np
from absl import logging
from scipy.integrate import trapezoid
from scipy.special import gamma, gammainc

from ..guards import QuadratureError
from ..operators import ModelOperator
from ..spectral import SampledFunction, require_operator, spectral_density
from .results import NotApplicableError, SeminormResult, SeminormVerdict

T_MIN = 1e-4
T_MAX = 1e6
POINTS_PER_DECADE = 32
FINITE_SLOPE = -0.1
DIVERGENT_SLOPE = -0.02


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise ValueError(f"alpha must be positive, got {alpha}")
    return alpha


def classify_tail(slope: float) -> SeminormVerdict:
    """Verdict from the last-decade slope of t^{2α}‖e^{-tS}g‖²."""
    if slope < FINITE_SLOPE:
        return SeminormVerdict.FINITE
    if slope > DIVERGENT_SLOPE:
        return SeminormVerdict.DIVERGENT
    return SeminormVerdict.INCONCLUSIVE


def time_grid(t_min: float, t_max: float, points_per_decade: int) -> np.ndarray:
    """Log-spaced times with ``points_per_decade`` points per decade, endpoints included."""
    decades = math.log10(t_max / t_min)
    count = max(int(math.ceil(decades * points_per_decade)) + 1, 2)
    return np.logspace(math.log10(t_min), math.log10(t_max), count)


def seminorm_time(
    op: ModelOperator,
    g: SampledFunction,
    alpha: float,
    t_min: float = T_MIN,
    t_max: float = T_MAX,
    points_per_decade: int = POINTS_PER_DECADE,
) -> SeminormResult:
    """Range seminorm from the heat-semigroup representation.

    Raises:
        ValueError: For invalid α or time window.
        QuadratureError: If the integrand is not finite.
    """
    require_operator(g, op)
    alpha = _check_alpha(alpha)
    if not 0.0 < t_min < t_max:
        raise ValueError(f"need 0 < t_min < t_max, got {t_min}, {t_max}")
    density = spectral_density(g)
    if density.is_zero():
        return SeminormResult(
            alpha=alpha, verdict=SeminormVerdict.FINITE, value=0.0, tail_slope=math.nan,
            t_max=t_max, method="time",
        )

    t = time_grid(t_min, t_max, points_per_decade)
    integrand = t ** (2.0 * alpha) * density.heat_norms_squared(t)
    if not np.all(np.isfinite(integrand)):
        raise QuadratureError(f"non-finite seminorm integrand at alpha = {alpha}")

    window = t >= t_max / 10.0
    tail_values = integrand[window]
    if np.all(tail_values > 0.0):
        slope = float(np.polyfit(np.log(t[window]), np.log(tail_values), 1)[0])
    else:
        slope = -math.inf
    verdict = classify_tail(slope)
    if verdict is not SeminormVerdict.FINITE:
        return SeminormResult(
            alpha=alpha, verdict=verdict, tail_slope=slope, t_max=t_max, method="time",
            non_generic=density.non_generic,
        )

    body = trapezoid(integrand, np.log(t))
    k2 = density.frequencies**2
    a = 2.0 * alpha
    head_nodes = gamma(a) * (2.0 * k2) ** (-a) * gammainc(a, 2.0 * t_min * k2)
    e = density.end_exponent(0.0)
    head_end = density.coefficient * density.k_floor**e / e * t_min**a / a
    head = density.omega * (float(np.sum(density.weights * density.rho * head_nodes)) + head_end)
    tail = float(tail_values[-1]) / abs(slope) if math.isfinite(slope) else 0.0
    total = head + body + tail
    if not (math.isfinite(total) and total >= 0.0):
        raise QuadratureError(f"seminorm quadrature failed at alpha = {alpha}")
    return SeminormResult(
        alpha=alpha, verdict=verdict, value=math.sqrt(total), tail_slope=slope,
        t_max=t_max, method="time", non_generic=density.non_generic,
    )


def _range_constant(alpha: float) -> float:
    return math.gamma(2.0 * alpha) * 2.0 ** (-2.0 * alpha)


def seminorm_freq(op: ModelOperator, g: SampledFunction, alpha: float) -> SeminormResult:
    """Range seminorm from the spectral identity with the small-k exponent test."""
    require_operator(g, op)
    alpha = _check_alpha(alpha)
    density = spectral_density(g)
    if density.is_zero():
        return SeminormResult(alpha=alpha, verdict=SeminormVerdict.FINITE, value=0.0, method="freq")

    implied_slope = 2.0 * alpha - 0.5 * (density.exponent + 1.0)
    common = dict(alpha=alpha, tail_slope=implied_slope, method="freq", non_generic=density.non_generic)
    if not density.fit_reliable:
        logging.warning("small-k power fit unreliable for %s at alpha=%g", op.spec, alpha)
        return SeminormResult(verdict=SeminormVerdict.INCONCLUSIVE, **common)
    if not density.converges(-4.0 * alpha):
        return SeminormResult(verdict=SeminormVerdict.DIVERGENT, **common)
    integral = density.moment_integral(-4.0 * alpha)
    return SeminormResult(
        verdict=SeminormVerdict.FINITE, value=math.sqrt(_range_constant(alpha) * integral), **common
    )


def _finite_value(result: SeminormResult) -> float:
    if not result.is_finite:
        raise NotApplicableError(
            f"seminorm at alpha = {result.alpha} is {result.verdict.value}; not applicable at this alpha"
        )
    return float(result.value)


def range_inner(op: ModelOperator, f: SampledFunction, g: SampledFunction, alpha: float) -> float:
    """Inner product of the range Hilbert space R(S^α), by polarization.

    Raises:
        NotApplicableError: If f or g is not in the range at this α.
    """
    plus = _finite_value(seminorm_freq(op, f + g, alpha))
    minus = _finite_value(seminorm_freq(op, f - g, alpha))
    return 0.25 * (plus * plus - minus * minus)


def preimage_norm(op: ModelOperator, g: SampledFunction, alpha: float) -> float:
    """‖S^{-α} g‖ = (ω ∫ k^{-4α} ρ dk)^{1/2}; equals 2^α Γ(2α)^{-1/2} |||g|||_α.

    Raises:
        NotApplicableError: If the small-k exponent test fails.
    """
    require_operator(g, op)
    alpha = _check_alpha(alpha)
    integral = spectral_density(g).moment_integral(-4.0 * alpha)
    if not math.isfinite(integral):
        raise NotApplicableError(f"g is not in the range of S^{alpha}")
    return math.sqrt(integral)


__all__ = [
    "T_MIN",
    "T_MAX",
    "POINTS_PER_DECADE",
    "FINITE_SLOPE",
    "DIVERGENT_SLOPE",
    "classify_tail",
    "time_grid",
    "seminorm_time",
    "seminorm_freq",
    "range_inner",
    "preimage_norm",
]
