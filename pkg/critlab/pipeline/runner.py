"""Experiment orchestrator for executing sequences of steps."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Sequence

from absl import logging
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn

from ..guards import NumericalGuardError
from .config import ExperimentConfig, build_experiment_config
from .context import ExperimentContext
from .step import ExperimentStep, get_step


class ExperimentRunner:
    """Executes a configured sequence of experiment steps on one context."""

    def __init__(self, steps: Sequence[ExperimentStep]):
        """Initialize the runner with the steps to execute in order.

        Args:
            steps: Instantiated steps.
        """
        self.steps = steps

    def _run_step(self, step: ExperimentStep, context: ExperimentContext) -> ExperimentContext:
        name = step.__class__.__name__
        try:
            context = step.process(context)
        except NumericalGuardError as e:
            logging.warning("%s tripped a numerical guard: %s", name, e)
            context.guard_trips.append(f"{name}: {e}")
        except Exception as e:
            context.errors.append(f"Error in {name}: {str(e)}")
        return context

    def execute(self, context: ExperimentContext, show_progress: bool = True) -> ExperimentContext:
        """Run the context through every step.

        Guard trips are recorded and the run continues; any other error stops it.

        Args:
            context: Initialized experiment context.
            show_progress: Provide rich progress tracking in the terminal.

        Returns:
            The final context.
        """
        if not show_progress:
            for step in self.steps:
                context = self._run_step(step, context)
                if context.errors:
                    break
            return context

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
            TimeElapsedColumn(),
        ) as progress:
            task_id = progress.add_task("Running experiment...", total=len(self.steps))
            for step in self.steps:
                progress.update(task_id, description=f"Running {step.__class__.__name__}...")
                context = self._run_step(step, context)
                progress.advance(task_id)
                # Fast fail on configuration or usage errors
                if context.errors:
                    break
        return context


def build_steps(config: ExperimentConfig) -> list[ExperimentStep]:
    """Instantiate the ``steps`` list of a config.

    Entries are step names or one-key mappings ``{name: {param: value}}``.

    Raises:
        ValueError: For unknown steps or malformed entries.
    """
    steps: list[ExperimentStep] = []
    for entry in config.steps:
        if isinstance(entry, str):
            step_name, step_params = entry, {}
        elif isinstance(entry, dict):
            if len(entry) != 1:
                raise ValueError(f"Step mapping must have exactly one key, got: {list(entry.keys())}")
            step_name = next(iter(entry))
            step_params = entry[step_name] or {}
        else:
            raise ValueError(f"Invalid step entry (expected str or mapping): {entry!r}")
        steps.append(get_step(step_name)(**step_params))
    if not steps:
        raise ValueError("Experiment config defines no steps")
    return steps


def build_experiment(
    raw_config: dict[str, Any] | None = None,
    cli_overrides: dict[str, Any] | None = None,
) -> tuple[ExperimentRunner, ExperimentContext]:
    """Assemble a runner and its context from a parsed YAML config and CLI overrides."""
    config = build_experiment_config(raw_config, cli_overrides)
    runner = ExperimentRunner(build_steps(config))
    context = ExperimentContext(config=config, output_dir=Path(config.output_dir))
    return runner, context


__all__ = ["ExperimentRunner", "build_steps", "build_experiment"]
