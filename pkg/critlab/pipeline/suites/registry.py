"""Registry of verify suites and their reports."""

from __future__ import annotations

from typing import Callable

from absl import logging
from pydantic import BaseModel, Field

from ...guards import NumericalGuardError
from ...operators import parse_operator
from ...spectral import SampledFunction, TransformEngine, TransformFactory, sample_data
from ..config import ExperimentConfig


class CheckResult(BaseModel):
    """One row of ``verify_report.csv``."""
    suite: str
    check: str
    passed: bool
    detail: str = ""


class SuiteReport(BaseModel):
    """Checks run by one suite, plus any numerical guard that stopped it."""
    suite: str
    checks: list[CheckResult] = Field(default_factory=list)
    guard_trips: list[str] = Field(default_factory=list)

    def add(self, check: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(suite=self.suite, check=check, passed=bool(passed), detail=detail))
        return bool(passed)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.guard_trips


SuiteFunction = Callable[[ExperimentConfig, SuiteReport], None]

_SUITE_REGISTRY: dict[str, tuple[SuiteFunction, str]] = {}


def suite(name: str, description: str = "") -> Callable[[SuiteFunction], SuiteFunction]:
    """Decorator to register a verify suite ``fn(config, report)``."""
    def decorator(fn: SuiteFunction) -> SuiteFunction:
        if name in _SUITE_REGISTRY:
            raise ValueError(f"Verify suite '{name}' is already registered.")
        _SUITE_REGISTRY[name] = (fn, description)
        return fn
    return decorator


def get_suite(name: str) -> SuiteFunction:
    if name not in _SUITE_REGISTRY:
        available = ", ".join(_SUITE_REGISTRY.keys())
        raise ValueError(f"Unknown verify suite '{name}'. Available: {available}")
    return _SUITE_REGISTRY[name][0]


def list_suites() -> list[tuple[str, str]]:
    """``(name, description)`` of every registered suite, in registration order."""
    return [(name, desc) for name, (_, desc) in _SUITE_REGISTRY.items()]


def run_suite(name: str, config: ExperimentConfig) -> SuiteReport:
    """Run one suite; a numerical guard stops the suite and is recorded on the report."""
    fn = get_suite(name)
    report = SuiteReport(suite=name)
    try:
        fn(config, report)
    except NumericalGuardError as e:
        logging.warning("Suite %s stopped by a numerical guard: %s", name, e)
        report.guard_trips.append(str(e))
    logging.info("Suite %s: %d checks, %d failed", name, len(report.checks), len(report.failures))
    return report


def engine_for(spec: str, config: ExperimentConfig) -> TransformEngine:
    """Engine for ``spec`` on the configured (M, R) grid."""
    return TransformFactory.create(parse_operator(spec), config.grid_m, config.grid_r)


def data_for(spec: str, data: str, config: ExperimentConfig) -> SampledFunction:
    """Resolved data for ``spec`` on the configured grid."""
    return sample_data(engine_for(spec, config), data)


__all__ = [
    "CheckResult",
    "SuiteReport",
    "suite",
    "get_suite",
    "list_suites",
    "run_suite",
    "engine_for",
    "data_for",
]
