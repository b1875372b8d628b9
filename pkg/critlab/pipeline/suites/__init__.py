"""Verify suites: executable property checks over the model operators."""

from .registry import (
    CheckResult,
    SuiteReport,
    suite,
    get_suite,
    list_suites,
    run_suite,
    engine_for,
    data_for,
)

# Import suite modules to trigger their @suite decorators.
from . import spectral  # noqa: F401
from . import semigroup  # noqa: F401
from . import wave  # noqa: F401

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
