"""Result records for range seminorms, α-scans and Green kernels."""

from __future__ import annotations

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SeminormVerdict(str, Enum):
    FINITE = "Finite"
    DIVERGENT = "Divergent"
    INCONCLUSIVE = "Inconclusive"


class NotApplicableError(ValueError):
    """Raised when a quantity is requested outside the range where it is defined."""


class SeminormResult(BaseModel):
    """Value of |||g|||_{R(S^α)} or a divergence verdict.

    ``tail_slope`` is the fitted log-log slope of t^{2α}‖e^{-tS}g‖² over the
    last time decade (time method) or the slope implied by the small-k
    exponent (frequency method).
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0.0)
    verdict: SeminormVerdict
    value: Optional[float] = Field(default=None, description="Seminorm, set for Finite verdicts only.")
    tail_slope: float = Field(default=math.nan)
    t_max: float = Field(default=math.inf, description="Time cutoff of the quadrature.")
    method: str = Field(default="time")
    non_generic: bool = Field(default=False)

    @model_validator(mode="after")
    def _check_value(self) -> "SeminormResult":
        if self.verdict is SeminormVerdict.FINITE:
            if self.value is None or not self.value >= 0.0:
                raise ValueError("Finite verdicts need a nonnegative value")
        elif self.value is not None:
            raise ValueError(f"{self.verdict.value} verdicts carry no value")
        return self

    @property
    def is_finite(self) -> bool:
        return self.verdict is SeminormVerdict.FINITE

    @property
    def is_divergent(self) -> bool:
        return self.verdict is SeminormVerdict.DIVERGENT


class IntervalEstimate(BaseModel):
    """Per-α verdicts of a scan and the bracket (lo, hi) for sup I_S."""
    model_config = ConfigDict(frozen=True)

    alpha_grid: list[float]
    verdicts: list[SeminormResult]
    sup_bracket: tuple[float, float]
    edge_checks: list[SeminormResult] = Field(default_factory=list)
    consistent: bool = Field(default=True, description="Edge cross-checks do not contradict the scan.")

    def contains(self, value: float, slack: float = 0.0) -> bool:
        lo, hi = self.sup_bracket
        return lo - slack <= value <= hi + slack

    @property
    def width(self) -> float:
        lo, hi = self.sup_bracket
        return hi - lo


class GreenKernelResult(BaseModel):
    """Φ_{S,α}(x, y) by time quadrature, with its closed form when available."""
    model_config = ConfigDict(frozen=True)

    alpha: float
    distance: float
    verdict: SeminormVerdict
    value: Optional[float] = None
    closed_form: Optional[float] = None
    rel_error: Optional[float] = None


__all__ = [
    "SeminormVerdict",
    "NotApplicableError",
    "SeminormResult",
    "IntervalEstimate",
    "GreenKernelResult",
]
