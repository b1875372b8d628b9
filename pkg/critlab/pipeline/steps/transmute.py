"""Transmutation identity step."""

from __future__ import annotations

from typing import Any

from ...io import write_csv
from ...wave import transmutation_check
from ..context import ExperimentContext
from ..step import register_step


@register_step("transmute")
class TransmuteStep:
    """Relative error of the heat/wave transmutation identity at each time (``transmute.csv``)."""

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        g = config.sample()
        rows = [[t, transmutation_check(config.op, g, t)] for t in config.transmute_times]
        path = write_csv(context.output_path("transmute.csv"), ["t", "rel_error"], rows)
        context.results["transmute"] = rows
        context.artifacts["transmute_csv"] = str(path)
        return context


__all__ = ["TransmuteStep"]
