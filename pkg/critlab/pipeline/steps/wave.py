"""Wave decay-curve step."""

from __future__ import annotations

from typing import Any

from ...io import write_csv
from ...wave import decay_curve
from ..context import ExperimentContext
from ..step import register_step


@register_step("wave")
class WaveStep:
    """Whole-space ‖W(t)g‖ on the wave time grid, with the fitted growth law.

    Writes ``wave.csv`` (t, norm, best model, its residual) and
    ``wave_models.csv`` (all candidate models).
    """

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        config = context.config
        curve = decay_curve(
            config.op, config.sample(), config.wave_times(), alpha=config.wave_alpha, max_workers=config.workers or 1
        )
        model = curve.model
        path = write_csv(
            context.output_path("wave.csv"),
            ["t", "wave_norm", "model", "residual"],
            [[t, n, model.kind, model.residual] for t, n in zip(curve.times, curve.norms)],
        )
        models_path = write_csv(
            context.output_path("wave_models.csv"),
            ["model", "parameter", "residual"],
            [[m.kind, m.parameter, m.residual] for m in curve.candidates],
        )
        context.results["wave"] = curve
        context.artifacts["wave_csv"] = str(path)
        context.artifacts["wave_models_csv"] = str(models_path)
        return context


__all__ = ["WaveStep"]
