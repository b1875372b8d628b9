"""Heat decay step."""

from __future__ import annotations

from typing import Any

import numpy as np

from ...io import write_csv
from ...semigroup import heat_decay_rate, heat_norm
from ..context import ExperimentContext
from ..step import register_step


@register_step("heat")
class HeatStep:
    """‖e^{-tS}g‖ on a log grid (``heat.csv``) and its fitted decay exponent."""

    def __init__(self, t_min: float = 1.0, t_max: float = 1e4, points_per_decade: int = 8):
        self.times = np.logspace(
            np.log10(t_min), np.log10(t_max), int(round(np.log10(t_max / t_min) * points_per_decade)) + 1
        )

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        op = config.op
        g = config.sample()
        norms = heat_norm(op, g, self.times)
        path = write_csv(context.output_path("heat.csv"), ["t", "heat_norm"], list(zip(self.times, norms)))
        context.results["heat_rate"] = heat_decay_rate(op, g, self.times)
        context.artifacts["heat_csv"] = str(path)
        return context


__all__ = ["HeatStep"]
