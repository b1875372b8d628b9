"""Generalized Green kernel step."""

from __future__ import annotations

from typing import Any

from ...io import write_csv
from ...semigroup import green_kernel_alpha
from ..context import ExperimentContext
from ..step import register_step


@register_step("green")
class GreenStep:
    """Φ_{S,α} at the configured distance for every ``green.alphas`` entry (``green.csv``)."""

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        results = [
            green_kernel_alpha(config.op, 0.0, config.green_distance, alpha)
            for alpha in config.green_alphas
        ]
        path = write_csv(
            context.output_path("green.csv"),
            ["alpha", "distance", "verdict", "value", "closed_form", "rel_error"],
            [[r.alpha, r.distance, r.verdict, r.value, r.closed_form, r.rel_error] for r in results],
        )
        context.results["green"] = results
        context.artifacts["green_csv"] = str(path)
        return context


__all__ = ["GreenStep"]
