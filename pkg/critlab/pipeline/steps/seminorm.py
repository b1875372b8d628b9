"""Range seminorm step: time and frequency methods side by side."""

from __future__ import annotations

import math
from typing import Any, Optional

from ...io import write_csv
from ...semigroup import seminorm_freq, seminorm_time
from ..context import ExperimentContext
from ..step import register_step


@register_step("seminorm")
class SeminormStep:
    """Evaluate |||g|||_{R(S^α)} both ways for every configured α and write ``seminorm.csv``."""

    def __init__(self, alphas: Optional[list[float]] = None):
        """Initialize the step.

        Args:
            alphas: α values; defaults to the config's ``alpha.values``.
        """
        self.alphas = alphas

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        op = config.op
        g = config.sample()
        rows = []
        for alpha in self.alphas or config.alphas:
            by_time = seminorm_time(
                op, g, alpha, t_min=config.t_min, t_max=config.t_max,
                points_per_decade=config.points_per_decade,
            )
            by_freq = seminorm_freq(op, g, alpha)
            rel_diff = None
            if by_time.is_finite and by_freq.is_finite and by_freq.value > 0.0:
                rel_diff = abs(by_time.value - by_freq.value) / by_freq.value
            rows.append([
                alpha, by_time.verdict, by_time.value, by_freq.verdict, by_freq.value,
                rel_diff, by_time.tail_slope if math.isfinite(by_time.tail_slope) else None,
            ])

        path = write_csv(
            context.output_path("seminorm.csv"),
            ["alpha", "time_verdict", "time_value", "freq_verdict", "freq_value", "rel_diff", "tail_slope"],
            rows,
        )
        context.results["seminorm"] = rows
        context.artifacts["seminorm_csv"] = str(path)
        return context


__all__ = ["SeminormStep"]
