"""α-scan step bracketing sup I_S."""

from __future__ import annotations

from typing import Any, Optional

from ...io import write_csv
from ...operators import classify
from ...semigroup import scan_interval
from ..context import ExperimentContext
from ..step import register_step


@register_step("scan")
class ScanStep:
    """Scan α, write ``scan.csv`` and store the IntervalEstimate."""

    def __init__(self, lo: Optional[float] = None, hi: Optional[float] = None, step: Optional[float] = None):
        self.lo = lo
        self.hi = hi
        self.step = step

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        op = config.op
        estimate = scan_interval(
            op,
            config.sample(),
            self.lo or config.alpha_lo,
            self.hi or config.alpha_hi,
            self.step or config.alpha_step,
            t_min=config.t_min,
            t_max=config.t_max,
            max_workers=config.workers,
        )
        rows = [[r.alpha, r.verdict, r.value, r.tail_slope] for r in estimate.verdicts]
        path = write_csv(context.output_path("scan.csv"), ["alpha", "verdict", "value", "tail_slope"], rows)
        context.results["scan"] = estimate
        context.results["classification"] = classify(op)
        context.artifacts["scan_csv"] = str(path)
        return context


__all__ = ["ScanStep"]
