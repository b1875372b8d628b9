"""Long-time behaviour of ‖W_S(t)g‖ and the fitted growth laws."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Optional

import numpy as np
from absl import logging
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..operators import ModelOperator
from ..semigroup import seminorm_freq
from ..spectral import ProfileSpline, SampledFunction, require_operator
from .propagator import wave_norm

MIN_FIT_POINTS = 8
# Lower bounds of the growth parameters, so a bounded curve is not absorbed by a flat growth fit.
MIN_POWER = 0.05
MIN_LOG_SHARE = 0.05
BOUND_SLACK = 1e-8


class DegenerateFitError(ValueError):
    """Raised when a decay curve has too few points in its last decade to fit."""

    def __init__(self, message: str, points: int = 0):
        super().__init__(message)
        self.points = points


class GrowthKind(str, Enum):
    POWER = "Power"
    SQRT_LOG = "SqrtLog"
    BOUNDED = "Bounded"


class GrowthModel(BaseModel):
    """One fitted law for ‖W(t)g‖ on the last decade.

    ``parameter`` is the exponent p of C t^p (Power), the coefficient b of
    ‖W‖² ≈ a + b log t (SqrtLog) or the sup of the curve (Bounded).
    """
    model_config = ConfigDict(frozen=True)

    kind: GrowthKind
    parameter: float
    residual: float = Field(ge=0.0, description="RMS relative misfit of the norms.")


class DecayCurve(BaseModel):
    """Sampled ‖W_S(t)g‖ with the best growth model and the weighted-sup comparison."""
    model_config = ConfigDict(frozen=True)

    times: list[float]
    norms: list[float]
    model: GrowthModel
    candidates: list[GrowthModel] = Field(default_factory=list)
    alpha: Optional[float] = None
    weighted_sup: Optional[float] = Field(default=None, description="max_t t^{2α-1}‖W(t)g‖ on the grid.")
    bound: Optional[float] = Field(default=None, description="2^{1/2+α(1-2α)} |||g|||_α when finite.")

    @field_validator("times")
    @classmethod
    def _increasing(cls, v: list[float]) -> list[float]:
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("times must be strictly increasing")
        return v

    @field_validator("norms")
    @classmethod
    def _nonnegative(cls, v: list[float]) -> list[float]:
        if any(not x >= 0.0 for x in v):
            raise ValueError("norms must be nonnegative")
        return v

    @model_validator(mode="after")
    def _same_length(self) -> "DecayCurve":
        if len(self.times) != len(self.norms):
            raise ValueError("times and norms differ in length")
        return self

    @property
    def residuals(self) -> dict[str, float]:
        return {m.kind.value: m.residual for m in self.candidates}

    @property
    def bound_holds(self) -> Optional[bool]:
        if self.bound is None or self.weighted_sup is None:
            return None
        return self.weighted_sup <= self.bound + BOUND_SLACK

    def bounded_exponent(self, step: float = 0.01) -> float:
        """Largest α* ≤ 1/2 keeping t^{2α*-1}‖W(t)g‖ bounded under the fitted model."""
        if self.model.kind is GrowthKind.BOUNDED:
            return 0.5
        if self.model.kind is GrowthKind.POWER:
            return max(0.5 * (1.0 - self.model.parameter), 0.0)
        return 0.5 - step


def _relative_residual(predicted: NDArray, observed: NDArray) -> float:
    return float(np.sqrt(np.mean(((predicted - observed) / observed) ** 2)))


def fit_growth_models(times: ArrayLike, norms: ArrayLike) -> list[GrowthModel]:
    """Fit Bounded, SqrtLog and Power laws on the last decade (in that order).

    Raises:
        DegenerateFitError: With fewer than 8 positive points in the last decade.
    """
    t = np.asarray(times, dtype=float)
    n = np.asarray(norms, dtype=float)
    window = (t >= t[-1] / 10.0) & (n > 0.0)
    if window.sum() < MIN_FIT_POINTS:
        raise DegenerateFitError(
            f"need at least {MIN_FIT_POINTS} points in the last decade, got {int(window.sum())}",
            int(window.sum()),
        )
    t, n = t[window], n[window]
    log_t = np.log(t)

    level = float(np.mean(n))
    bounded = GrowthModel(
        kind=GrowthKind.BOUNDED,
        parameter=float(np.max(n)),
        residual=_relative_residual(np.full_like(n, level), n),
    )

    n2 = n * n
    b, a = np.polyfit(log_t, n2, 1)
    floor = MIN_LOG_SHARE * float(np.mean(n2))
    if b < floor:
        b = floor
        a = float(np.mean(n2 - b * log_t))
    sqrt_log = GrowthModel(
        kind=GrowthKind.SQRT_LOG,
        parameter=float(b),
        residual=_relative_residual(np.sqrt(np.maximum(a + b * log_t, 0.0)), n),
    )

    p, c = np.polyfit(log_t, np.log(n), 1)
    if p < MIN_POWER:
        p = MIN_POWER
        c = float(np.mean(np.log(n) - p * log_t))
    power = GrowthModel(
        kind=GrowthKind.POWER,
        parameter=float(p),
        residual=_relative_residual(np.exp(c + p * log_t), n),
    )
    return [bounded, sqrt_log, power]


def best_model(candidates: list[GrowthModel]) -> GrowthModel:
    """Smallest residual; earlier candidates win ties."""
    best = candidates[0]
    for model in candidates[1:]:
        if model.residual < best.residual:
            best = model
    return best


def decay_curve(
    op: ModelOperator,
    g: SampledFunction,
    t_grid: ArrayLike,
    alpha: Optional[float] = None,
    max_workers: Optional[int] = 1,
) -> DecayCurve:
    """Whole-space wave norms on ``t_grid`` and the best growth law.

    With ``alpha`` given, also reports max_t t^{2α-1}‖W(t)g‖ and, when the
    seminorm is Finite, the bound 2^{1/2+α(1-2α)}|||g|||_{R(S^α)}.

    Raises:
        ValueError: If the grid spans fewer than two decades.
        DegenerateFitError: If the last decade holds fewer than 8 points.
    """
    require_operator(g, op)
    t = np.sort(np.asarray(t_grid, dtype=float))
    if t.size < 2 or t[0] <= 0.0 or math.log10(t[-1] / t[0]) < 2.0 - 1e-9:
        raise ValueError("t_grid must be positive and span at least two decades")

    spline = ProfileSpline(g)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        norms = np.array(list(executor.map(lambda s: wave_norm(op, g, s, spline), t)))

    if g.is_zero():
        zero = GrowthModel(kind=GrowthKind.BOUNDED, parameter=0.0, residual=0.0)
        return DecayCurve(times=t.tolist(), norms=norms.tolist(), model=zero, candidates=[zero], alpha=alpha)

    candidates = fit_growth_models(t, norms)
    model = best_model(candidates)
    logging.info(
        "Decay curve of %s: %s (%s)", op.spec, model.kind.value,
        ", ".join(f"{m.kind.value}={m.residual:.3g}" for m in candidates),
    )

    weighted_sup = bound = None
    if alpha is not None:
        weighted_sup = float(np.max(t ** (2.0 * alpha - 1.0) * norms))
        result = seminorm_freq(op, g, alpha)
        if result.is_finite:
            bound = 2.0 ** (0.5 + alpha * (1.0 - 2.0 * alpha)) * float(result.value)
    return DecayCurve(
        times=t.tolist(),
        norms=norms.tolist(),
        model=model,
        candidates=candidates,
        alpha=alpha,
        weighted_sup=weighted_sup,
        bound=bound,
    )


__all__ = [
    "MIN_FIT_POINTS",
    "DegenerateFitError",
    "GrowthKind",
    "GrowthModel",
    "DecayCurve",
    "fit_growth_models",
    "best_model",
    "decay_curve",
]
