"""YAML-based experiment configuration.

A config file is one mapping with top-level keys (``name``, ``description``,
``operator``, ``data``, ``seed``, ``output_dir``, ``workers``, ``steps``) and
flat per-command sections::

    grid:      {m: 512, r: 40.0}
    time:      {t_min: 1.0e-4, t_max: 1.0e+6, points_per_decade: 32}
    alpha:     {values: [0.1, 0.2], lo: 0.02, hi: 1.6, step: 0.02}
    wave:      {t_min: 0.1, t_max: 1000.0, points_per_decade: 16, alpha: 0.5}
    green:     {distance: 1.0, alphas: [0.3, 0.5]}
    transmute: {times: [0.5, 1.0, 2.0]}
    verify:    {suites: [transforms], samples: 100}

Command-line flags override file values, which override the defaults below.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..operators import ModelOperator, parse_operator
from ..spectral import (
    MIN_GRID_SIZE,
    SampledFunction,
    TransformEngine,
    TransformFactory,
    check_support,
    parse_data_spec,
    sample_data,
)

# Directory containing built-in experiment configs shipped with the package.
_CONFIGS_DIR = Path(__file__).parent / "configs"

DEFAULT_STEPS = ["seminorm", "scan", "wave"]


class ExperimentConfig(BaseModel):
    """Effective configuration of one experiment run."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(default="experiment")
    description: str = Field(default="")
    operator: str = Field(default="free:3", description="Operator spec: free1d, free:N or hardy:N:lambda.")
    data: str = Field(default="gaussian(1)", description="Data spec, e.g. bump(3,1).")
    grid_m: int = Field(default=512, ge=MIN_GRID_SIZE, description="Grid size M.")
    grid_r: float = Field(default=40.0, gt=0.0, description="Domain cutoff R.")
    t_min: float = Field(default=1e-4, gt=0.0)
    t_max: float = Field(default=1e6, gt=0.0)
    points_per_decade: int = Field(default=32, ge=4)
    alphas: list[float] = Field(default_factory=lambda: [0.1, 0.2, 0.3, 0.4])
    alpha_lo: float = Field(default=0.02, gt=0.0)
    alpha_hi: float = Field(default=1.6, gt=0.0)
    alpha_step: float = Field(default=0.02, gt=0.0)
    wave_t_min: float = Field(default=0.1, gt=0.0)
    wave_t_max: float = Field(default=1e3, gt=0.0)
    wave_points_per_decade: int = Field(default=16, ge=2)
    wave_alpha: Optional[float] = Field(default=0.5, gt=0.0, le=0.5)
    green_distance: float = Field(default=1.0, gt=0.0)
    green_alphas: list[float] = Field(default_factory=lambda: [0.3, 0.5])
    transmute_times: list[float] = Field(default_factory=lambda: [0.5, 1.0, 2.0])
    suites: list[str] = Field(default_factory=list, description="Verify suites to run (empty: all).")
    samples: int = Field(default=100, ge=1, description="Random functions per kind in randomized suites.")
    output_dir: str = Field(default="outputs/critlab")
    seed: int = Field(default=0)
    workers: Optional[int] = Field(default=None, ge=1)
    steps: list[Any] = Field(default_factory=lambda: list(DEFAULT_STEPS))

    @field_validator("operator")
    @classmethod
    def _check_operator(cls, v: str) -> str:
        return parse_operator(v).spec

    @field_validator("data")
    @classmethod
    def _check_data(cls, v: str) -> str:
        return parse_data_spec(v).text

    @field_validator("alphas", "green_alphas", "transmute_times")
    @classmethod
    def _check_positive_list(cls, v: list[float]) -> list[float]:
        if not v:
            raise ValueError("list must not be empty")
        if any(not x > 0.0 for x in v):
            raise ValueError("values must be positive")
        return v

    @model_validator(mode="after")
    def _check_ranges(self) -> "ExperimentConfig":
        if not self.t_min < self.t_max:
            raise ValueError("time.t_min must be below time.t_max")
        if not self.alpha_lo < self.alpha_hi:
            raise ValueError("alpha.lo must be below alpha.hi")
        if not self.wave_t_min * 100.0 <= self.wave_t_max * (1.0 + 1e-12):
            raise ValueError("the wave time grid must span at least two decades")
        check_support(parse_data_spec(self.data), self.op, self.grid_r)
        return self

    @property
    def op(self) -> ModelOperator:
        return parse_operator(self.operator)

    def engine(self) -> TransformEngine:
        return TransformFactory.create(self.op, self.grid_m, self.grid_r)

    def sample(self, guard: bool = True) -> SampledFunction:
        """Data sampled on the configured grid (runs the resolution guard)."""
        return sample_data(self.engine(), self.data, guard=guard)

    def wave_times(self) -> np.ndarray:
        decades = np.log10(self.wave_t_max / self.wave_t_min)
        count = int(np.ceil(decades * self.wave_points_per_decade)) + 1
        return np.logspace(np.log10(self.wave_t_min), np.log10(self.wave_t_max), count)

    def step_names(self) -> list[str]:
        return [entry if isinstance(entry, str) else next(iter(entry)) for entry in self.steps]

    def settings(self) -> dict[str, Any]:
        """Flat mapping echoed into ``manifest.txt``."""
        out = self.model_dump(exclude={"steps"})
        out["steps"] = self.step_names()
        return out


def load_experiment_config(path: str | Path) -> dict[str, Any]:
    """Read and return the raw YAML experiment configuration.

    Raises:
        FileNotFoundError: If the file does not exist.
        yaml.YAMLError: If the file is not valid YAML.
        ValueError: If the file is not a mapping or a section is not flat.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Experiment config not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    if not isinstance(raw, dict):
        raise ValueError(f"Experiment config must be a YAML mapping, got {type(raw).__name__}")
    for key, value in raw.items():
        if key == "steps" or not isinstance(value, dict):
            continue
        for inner, item in value.items():
            if isinstance(item, dict):
                raise ValueError(f"Section '{key}' must be flat, '{inner}' is a mapping")
    return raw


def build_experiment_config(
    raw_config: dict[str, Any] | None = None,
    cli_overrides: dict[str, Any] | None = None,
) -> ExperimentConfig:
    """Resolve override > file > default for every key and validate.

    Supported override keys are the field names of :class:`ExperimentConfig`.

    Raises:
        pydantic.ValidationError: For invalid specs, empty α lists or bad grids.
    """
    raw = raw_config or {}
    overrides = cli_overrides or {}

    def _resolve(yaml_section: dict | None, yaml_key: str, override_key: str) -> Any:
        """Pick override > yaml; None means the model default."""
        if override_key in overrides and overrides[override_key] is not None:
            return overrides[override_key]
        if yaml_section and yaml_key in yaml_section:
            return yaml_section[yaml_key]
        return None

    def section(name: str) -> dict[str, Any]:
        return raw.get(name, {}) or {}

    values: dict[str, Any] = {
        "name": _resolve(raw, "name", "name"),
        "description": _resolve(raw, "description", "description"),
        "operator": _resolve(raw, "operator", "operator"),
        "data": _resolve(raw, "data", "data"),
        "seed": _resolve(raw, "seed", "seed"),
        "output_dir": _resolve(raw, "output_dir", "output_dir"),
        "workers": _resolve(raw, "workers", "workers"),
        "steps": _resolve(raw, "steps", "steps"),
        "grid_m": _resolve(section("grid"), "m", "grid_m"),
        "grid_r": _resolve(section("grid"), "r", "grid_r"),
        "t_min": _resolve(section("time"), "t_min", "t_min"),
        "t_max": _resolve(section("time"), "t_max", "t_max"),
        "points_per_decade": _resolve(section("time"), "points_per_decade", "points_per_decade"),
        "alphas": _resolve(section("alpha"), "values", "alphas"),
        "alpha_lo": _resolve(section("alpha"), "lo", "alpha_lo"),
        "alpha_hi": _resolve(section("alpha"), "hi", "alpha_hi"),
        "alpha_step": _resolve(section("alpha"), "step", "alpha_step"),
        "wave_t_min": _resolve(section("wave"), "t_min", "wave_t_min"),
        "wave_t_max": _resolve(section("wave"), "t_max", "wave_t_max"),
        "wave_points_per_decade": _resolve(section("wave"), "points_per_decade", "wave_points_per_decade"),
        "wave_alpha": _resolve(section("wave"), "alpha", "wave_alpha"),
        "green_distance": _resolve(section("green"), "distance", "green_distance"),
        "green_alphas": _resolve(section("green"), "alphas", "green_alphas"),
        "transmute_times": _resolve(section("transmute"), "times", "transmute_times"),
        "suites": _resolve(section("verify"), "suites", "suites"),
        "samples": _resolve(section("verify"), "samples", "samples"),
    }
    if isinstance(values["alphas"], (int, float)):
        values["alphas"] = [values["alphas"]]
    if values["output_dir"] is not None:
        values["output_dir"] = str(values["output_dir"])
    return ExperimentConfig(**{k: v for k, v in values.items() if v is not None})


def list_experiment_configs() -> list[tuple[str, str]]:
    """Scan the built-in configs directory and return ``(filename, description)`` pairs.

    Falls back to just the filename if a file cannot be parsed.
    """
    results: list[tuple[str, str]] = []
    if not _CONFIGS_DIR.is_dir():
        return results

    for yaml_file in sorted(_CONFIGS_DIR.glob("*.yaml")):
        try:
            with open(yaml_file, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f)
            name = raw.get("name", yaml_file.stem)
            desc = raw.get("description", "")
            label = f"{name}: {desc}" if desc else name
        except Exception:
            label = yaml_file.stem
        results.append((yaml_file.name, label))

    return results


def builtin_config_path(name: str) -> Path:
    """Path of a built-in config by file name or stem."""
    filename = name if name.endswith(".yaml") else f"{name}.yaml"
    path = _CONFIGS_DIR / filename
    if not path.exists():
        available = ", ".join(f for f, _ in list_experiment_configs())
        raise FileNotFoundError(f"Unknown built-in config '{name}'. Available: {available}")
    return path


__all__ = [
    "DEFAULT_STEPS",
    "ExperimentConfig",
    "load_experiment_config",
    "build_experiment_config",
    "list_experiment_configs",
    "builtin_config_path",
]
