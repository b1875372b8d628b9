"""Tests for YAML experiment configs and override precedence."""

from __future__ import annotations

import pytest
import yaml
from pydantic import ValidationError

from critlab.pipeline import (
    DEFAULT_STEPS,
    ExperimentConfig,
    build_experiment_config,
    builtin_config_path,
    list_experiment_configs,
    load_experiment_config,
)
from critlab.pipeline.runner import build_steps
from critlab.pipeline.steps import ScanStep, SeminormStep
from critlab.pipeline.suites.registry import engine_for
from critlab.spectral import sample_data


def _write(tmp_path, payload) -> str:
    path = tmp_path / "experiment.yaml"
    path.write_text(yaml.safe_dump(payload), encoding="utf-8")
    return str(path)


def test_defaults():
    config = build_experiment_config()
    assert config.operator == "free:3"
    assert config.grid_m == 512
    assert config.step_names() == DEFAULT_STEPS
    assert config.wave_times()[0] == pytest.approx(0.1)
    assert config.wave_times()[-1] == pytest.approx(1e3)


def test_override_beats_file_beats_default():
    raw = {"operator": "free:2", "grid": {"m": 256, "r": 30.0}, "alpha": {"values": [0.2]}}
    config = build_experiment_config(raw, {"grid_m": 1024})
    assert config.grid_m == 1024
    assert config.grid_r == 30.0
    assert config.operator == "free:2"
    assert config.alphas == [0.2]
    assert config.alpha_step == 0.02


def test_specs_are_canonicalized():
    config = build_experiment_config({"operator": "hardy:3:-1/4", "data": "bump(3, 1)"})
    assert config.operator == "hardy:3:-0.25"
    assert config.data == "bump(3,1)"


def test_scalar_alpha_becomes_a_list():
    assert build_experiment_config({"alpha": {"values": 0.3}}).alphas == [0.3]


@pytest.mark.parametrize(
    "raw",
    [
        {"alpha": {"values": []}},
        {"alpha": {"values": [0.1, -0.2]}},
        {"operator": "hardy:3:x"},
        {"data": "spike(1)"},
        {"grid": {"m": 8}},
        {"time": {"t_min": 10.0, "t_max": 1.0}},
        {"alpha": {"lo": 1.0, "hi": 0.5}},
        {"wave": {"t_min": 1.0, "t_max": 10.0}},
        {"wave": {"alpha": 0.7}},
        {"data": "bump(50,1)"},
    ],
)
def test_invalid_configs(raw):
    with pytest.raises(ValidationError):
        build_experiment_config(raw)


def test_config_is_frozen():
    config = ExperimentConfig()
    with pytest.raises(ValidationError):
        config.grid_m = 64


def test_settings_echo_step_names():
    config = build_experiment_config({"steps": ["seminorm", {"scan": {"step": 0.05}}]})
    settings = config.settings()
    assert settings["steps"] == ["seminorm", "scan"]
    assert settings["operator"] == "free:3"


def test_build_steps_with_parameters():
    config = build_experiment_config({"steps": ["seminorm", {"scan": {"step": 0.05}}]})
    steps = build_steps(config)
    assert isinstance(steps[0], SeminormStep)
    assert isinstance(steps[1], ScanStep)
    assert steps[1].step == 0.05


@pytest.mark.parametrize("entries", [["nope"], [{"scan": {}, "wave": {}}], [42], []])
def test_build_steps_rejects_bad_entries(entries):
    config = build_experiment_config({"steps": entries})
    with pytest.raises(ValueError):
        build_steps(config)


def test_load_rejects_nested_sections(tmp_path):
    path = _write(tmp_path, {"grid": {"m": {"value": 512}}})
    with pytest.raises(ValueError, match="flat"):
        load_experiment_config(path)


def test_load_rejects_non_mappings(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError, match="mapping"):
        load_experiment_config(path)
    with pytest.raises(FileNotFoundError):
        load_experiment_config(tmp_path / "absent.yaml")


def test_builtin_configs_are_valid():
    names = [filename for filename, _ in list_experiment_configs()]
    assert {"default.yaml", "quick.yaml", "hardy-critical.yaml", "free-line.yaml", "verify.yaml"} <= set(names)
    for filename in names:
        config = build_experiment_config(load_experiment_config(builtin_config_path(filename)))
        assert build_steps(config)


def test_builtin_config_lookup():
    assert builtin_config_path("quick").name == "quick.yaml"
    with pytest.raises(FileNotFoundError, match="Available"):
        builtin_config_path("missing")


def test_builtin_config_data_resolves_on_its_grid():
    for filename, _ in list_experiment_configs():
        config = build_experiment_config(load_experiment_config(builtin_config_path(filename)))
        sample_data(engine_for(config.operator, config), config.data)


@pytest.mark.parametrize("spec, data", [("free1d", "bump(0,2)"), ("free1d", "dipole(4,10,2)"), ("free:3", "bump(3,1)")])
def test_line_suite_data_resolves_on_shipped_grids(spec, data):
    for name in ("default", "quick", "verify"):
        config = build_experiment_config(load_experiment_config(builtin_config_path(name)))
        sample_data(engine_for(spec, config), data)
