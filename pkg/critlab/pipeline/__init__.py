"""Experiment pipeline: configs, steps, the runner and the verify suites.

Steps are chained from a YAML config and share one ExperimentContext.
"""

from .config import (
    DEFAULT_STEPS,
    ExperimentConfig,
    load_experiment_config,
    build_experiment_config,
    list_experiment_configs,
    builtin_config_path,
)
from .context import EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_VIOLATION, ExperimentContext
from .step import ExperimentStep, register_step, get_step, list_available_steps
from .runner import ExperimentRunner, build_steps, build_experiment
from .suites import CheckResult, SuiteReport, get_suite, list_suites, run_suite

# Load implementations to trigger their @register_step decorators.
from .steps import seminorm, scan, wave, heat, green, transmute, verify  # noqa: F401

__all__ = [
    "DEFAULT_STEPS",
    "ExperimentConfig",
    "load_experiment_config",
    "build_experiment_config",
    "list_experiment_configs",
    "builtin_config_path",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_GUARD",
    "EXIT_VIOLATION",
    "ExperimentContext",
    "ExperimentStep",
    "register_step",
    "get_step",
    "list_available_steps",
    "ExperimentRunner",
    "build_steps",
    "build_experiment",
    "CheckResult",
    "SuiteReport",
    "get_suite",
    "list_suites",
    "run_suite",
]
