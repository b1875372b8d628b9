"""critlab: range seminorms, heat decay and wave growth for model Schrödinger operators.

Primary interface is the CLI:
    critlab seminorm --op free:3 --data "gaussian(1)" --alpha 0.4
    critlab scan --op hardy:3:-0.25 --data "bump(3,1)"
    critlab wave --op free1d --data "bump(0,2)"
    critlab verify --config quick
"""

from __future__ import annotations

from typing import Any

__all__ = [
    # Operators
    "parse_operator",
    "classify",
    # Spectral data
    "sample_data",
    # Heat semigroup and range seminorms
    "heat_norm",
    "seminorm_time",
    "seminorm_freq",
    "scan_interval",
    "green_kernel_alpha",
    # Waves
    "wave_norm",
    "decay_curve",
    "transmutation_check",
    # Experiments
    "build_experiment",
]


def parse_operator(*args: Any, **kwargs: Any) -> Any:
    """Parse an operator spec such as ``hardy:3:-0.25``."""
    from .operators import parse_operator as _impl
    return _impl(*args, **kwargs)


def classify(*args: Any, **kwargs: Any) -> Any:
    """Analytic criticality verdict and sup I_S of an operator."""
    from .operators import classify as _impl
    return _impl(*args, **kwargs)


def sample_data(*args: Any, **kwargs: Any) -> Any:
    """Sample a data spec on an engine's grid."""
    from .spectral import sample_data as _impl
    return _impl(*args, **kwargs)


def heat_norm(*args: Any, **kwargs: Any) -> Any:
    """Whole-space norm of e^{-tS}g."""
    from .semigroup import heat_norm as _impl
    return _impl(*args, **kwargs)


def seminorm_time(*args: Any, **kwargs: Any) -> Any:
    """Range seminorm from the heat-semigroup representation."""
    from .semigroup import seminorm_time as _impl
    return _impl(*args, **kwargs)


def seminorm_freq(*args: Any, **kwargs: Any) -> Any:
    """Range seminorm from the spectral density."""
    from .semigroup import seminorm_freq as _impl
    return _impl(*args, **kwargs)


def scan_interval(*args: Any, **kwargs: Any) -> Any:
    """Bracket sup I_S on an α grid."""
    from .semigroup import scan_interval as _impl
    return _impl(*args, **kwargs)


def green_kernel_alpha(*args: Any, **kwargs: Any) -> Any:
    """Generalized Green kernel by time quadrature."""
    from .semigroup import green_kernel_alpha as _impl
    return _impl(*args, **kwargs)


def wave_norm(*args: Any, **kwargs: Any) -> Any:
    """Whole-space norm of W(t)g."""
    from .wave import wave_norm as _impl
    return _impl(*args, **kwargs)


def decay_curve(*args: Any, **kwargs: Any) -> Any:
    """Wave norms on a time grid with the best growth law."""
    from .wave import decay_curve as _impl
    return _impl(*args, **kwargs)


def transmutation_check(*args: Any, **kwargs: Any) -> Any:
    """Relative error of the heat/wave transmutation identity."""
    from .wave import transmutation_check as _impl
    return _impl(*args, **kwargs)


def build_experiment(*args: Any, **kwargs: Any) -> Any:
    """Runner and context for a YAML config plus overrides."""
    from .pipeline import build_experiment as _impl
    return _impl(*args, **kwargs)
