"""Generalized Green kernels Φ_{S,α}(x, y) = ∫_0^∞ t^{2α-1} p_S(x, y, t) dt."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import trapezoid
from scipy.special import gamma

from ..operators import ModelOperator, UnsupportedKindError, has_heat_kernel, heat_kernel
from .results import GreenKernelResult, SeminormVerdict
from .seminorm import time_grid

POINTS_PER_DECADE = 64


def _distance(x: ArrayLike, y: ArrayLike) -> float:
    d = float(np.linalg.norm(np.atleast_1d(np.asarray(x, dtype=float)) - np.atleast_1d(np.asarray(y, dtype=float))))
    if not (d > 0.0 and math.isfinite(d)):
        raise ValueError("green kernels need distinct finite points x != y")
    return d


def riesz_kernel(N: int, alpha: float, distance: float) -> float:
    """Closed form (4π)^{-N/2} Γ(N/2 - 2α) 4^{N/2-2α} d^{4α-N}, valid for 2α < N/2."""
    half = 0.5 * N
    if 2.0 * alpha >= half:
        return math.inf
    return (4.0 * math.pi) ** (-half) * gamma(half - 2.0 * alpha) * 4.0 ** (half - 2.0 * alpha) * distance ** (
        4.0 * alpha - N
    )


def green_kernel_alpha(
    op: ModelOperator,
    x: ArrayLike,
    y: ArrayLike,
    alpha: float,
    t_max: float | None = None,
    points_per_decade: int = POINTS_PER_DECADE,
) -> GreenKernelResult:
    """Time quadrature of Φ_{S,α}(x, y) for kinds with a closed-form heat kernel.

    The integrand t^{2α-1}(4πt)^{-N/2}e^{-d²/4t} is integrated by the trapezoid
    rule in log t from 1e-4·d² to ``t_max``; beyond ``t_max`` the two leading
    terms of e^{-d²/4t} give the tail analytically. Divergence (2α ≥ N/2) is
    decided by the tail exponent.

    Args:
        op: Free operator (``free1d`` or ``free:N``).
        x: First point (scalar or coordinates).
        y: Second point.
        alpha: Order α > 0.
        t_max: Quadrature cutoff, default 1e6·max(d², 1).
        points_per_decade: Quadrature density.

    Raises:
        UnsupportedKindError: If ``op`` has no closed-form heat kernel.
        ValueError: For α ≤ 0 or x = y.
    """
    if not has_heat_kernel(op):
        raise UnsupportedKindError(f"unsupported kind: {op.kind.value} has no closed-form heat kernel")
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    d = _distance(x, y)
    exponent = 2.0 * alpha - 0.5 * op.N
    if exponent >= 0.0:
        return GreenKernelResult(alpha=alpha, distance=d, verdict=SeminormVerdict.DIVERGENT)

    t_max = 1e6 * max(d * d, 1.0) if t_max is None else float(t_max)
    t = time_grid(1e-4 * d * d, t_max, points_per_decade)
    integrand = t ** (2.0 * alpha) * heat_kernel(op, d, t)
    body = trapezoid(integrand, np.log(t))
    scale = (4.0 * math.pi) ** (-0.5 * op.N)
    tail = scale * (t_max**exponent / -exponent - 0.25 * d * d * t_max ** (exponent - 1.0) / (1.0 - exponent))
    value = float(body + tail)

    closed = riesz_kernel(op.N, alpha, d)
    return GreenKernelResult(
        alpha=alpha,
        distance=d,
        verdict=SeminormVerdict.FINITE,
        value=value,
        closed_form=closed,
        rel_error=abs(value - closed) / closed,
    )


__all__ = ["riesz_kernel", "green_kernel_alpha"]
