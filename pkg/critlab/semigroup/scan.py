"""α-scans that bracket sup I_S."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
from absl import logging

from ..operators import ModelOperator
from ..spectral import SampledFunction, require_operator, spectral_density
from .results import IntervalEstimate, SeminormResult, SeminormVerdict
from .seminorm import T_MAX, T_MIN, seminorm_freq, seminorm_time


class InconclusiveScanError(RuntimeError):
    """Raised when no α of a scan reaches a Finite or Divergent verdict."""

    def __init__(self, message: str, alpha_grid: Optional[list[float]] = None):
        super().__init__(message)
        self.alpha_grid = alpha_grid or []


def alpha_grid(alpha_lo: float, alpha_hi: float, step: float) -> list[float]:
    """Equally spaced α values from ``alpha_lo`` up to ``alpha_hi`` (inclusive up to rounding)."""
    if not 0.0 < alpha_lo < alpha_hi:
        raise ValueError(f"need 0 < alpha_lo < alpha_hi, got {alpha_lo}, {alpha_hi}")
    if not step > 0.0:
        raise ValueError(f"alpha step must be positive, got {step}")
    count = int(math.floor((alpha_hi - alpha_lo) / step + 1e-9)) + 1
    return [round(alpha_lo + i * step, 12) for i in range(count)]


def bracket(alphas: list[float], verdicts: list[SeminormResult]) -> tuple[float, float]:
    """(last α of the Finite prefix, first α of the Divergent suffix).

    ``lo`` is 0 when the first α is not Finite; ``hi`` is ``inf`` when the
    last α is not Divergent.
    """
    lo = 0.0
    for a, v in zip(alphas, verdicts):
        if not v.is_finite:
            break
        lo = a
    hi = math.inf
    for a, v in zip(reversed(alphas), reversed(verdicts)):
        if not v.is_divergent:
            break
        hi = a
    return lo, hi


def scan_interval(
    op: ModelOperator,
    g: SampledFunction,
    alpha_lo: float,
    alpha_hi: float,
    step: float,
    t_min: float = T_MIN,
    t_max: float = T_MAX,
    max_workers: Optional[int] = None,
) -> IntervalEstimate:
    """Scan α ∈ [alpha_lo, alpha_hi] and bracket sup I_S.

    Verdicts come from :func:`seminorm_freq`; the bracket edges are
    cross-checked with :func:`seminorm_time`.

    Args:
        op: Model operator.
        g: Nonnegative data, not identically zero.
        alpha_lo: First α of the grid.
        alpha_hi: Last α of the grid.
        step: Grid spacing.
        t_min: Start of the time window for the edge checks.
        t_max: End of the time window for the edge checks.
        max_workers: Threads used for the α grid (None lets the executor choose).

    Raises:
        ValueError: For an invalid grid or zero / sign-changing data.
        InconclusiveScanError: If every verdict is Inconclusive.
    """
    require_operator(g, op)
    alphas = alpha_grid(alpha_lo, alpha_hi, step)
    if g.is_zero():
        raise ValueError("scan_interval needs data that is not identically zero")
    if np.iscomplexobj(g.samples) or np.any(g.samples < -1e-12 * np.abs(g.samples).max()):
        raise ValueError("scan_interval needs nonnegative data")

    # Build the cached density once before fanning out.
    spectral_density(g)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        verdicts = list(executor.map(lambda a: seminorm_freq(op, g, a), alphas))

    if all(v.verdict is SeminormVerdict.INCONCLUSIVE for v in verdicts):
        raise InconclusiveScanError(
            f"all {len(alphas)} verdicts are Inconclusive for {op.spec}; "
            "increase t_max or the domain cutoff R",
            alphas,
        )

    lo, hi = bracket(alphas, verdicts)
    edge_checks = []
    consistent = True
    if lo > 0.0:
        check = seminorm_time(op, g, lo, t_min=t_min, t_max=t_max)
        edge_checks.append(check)
        consistent &= not check.is_divergent
    if math.isfinite(hi):
        check = seminorm_time(op, g, hi, t_min=t_min, t_max=t_max)
        edge_checks.append(check)
        consistent &= not check.is_finite
    if not consistent:
        logging.warning("time-method edge checks disagree with the scan bracket (%g, %g)", lo, hi)
    logging.info("Scan of %s: sup I_S in (%g, %g)", op.spec, lo, hi)
    return IntervalEstimate(
        alpha_grid=alphas,
        verdicts=verdicts,
        sup_bracket=(lo, hi),
        edge_checks=edge_checks,
        consistent=bool(consistent),
    )


__all__ = ["InconclusiveScanError", "alpha_grid", "bracket", "scan_interval"]
