"""Radial data profiles and the data specification grammar.

Grammar: ``gaussian(width)``, ``bump(center,width)``, ``annulus(r0,r1)``,
``dipole(r0,r1,width)``. Profiles are smooth (C^∞) in r and even, so the
reduced samples are well resolved by both transform engines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from ..operators import ModelOperator, OperatorKind
from .engines import TransformEngine
from .functions import SampledFunction, check_resolved

_SPEC_PATTERN = re.compile(r"^\s*([a-z_]+)\s*\((.*)\)\s*$")


class DataSpecError(ValueError):
    """Raised when a data specification cannot be parsed or is invalid for a grid."""

    def __init__(self, message: str, spec: str | None = None):
        super().__init__(message if spec is None else f"{message}: '{spec}'")
        self.spec = spec


def bump_profile(r: NDArray[np.float64], center: float, width: float) -> NDArray[np.float64]:
    """exp(1 - 1/(1 - s²)) for |s| < 1, s = (r - center)/width; 0 outside."""
    s2 = ((r - center) / width) ** 2
    inside = s2 < 1.0
    out = np.zeros_like(r, dtype=float)
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - s2[inside]))
    return out


def _smooth_step(x: NDArray[np.float64]) -> NDArray[np.float64]:
    def phi(y: NDArray[np.float64]) -> NDArray[np.float64]:
        out = np.zeros_like(y)
        positive = y > 0.0
        out[positive] = np.exp(-1.0 / y[positive])
        return out

    a = phi(x)
    return a / (a + phi(1.0 - x))


@dataclass(frozen=True)
class DataSpec:
    """Parsed data specification."""
    shape: str
    params: tuple[float, ...]

    @property
    def text(self) -> str:
        return f"{self.shape}({','.join(f'{p:g}' for p in self.params)})"

    def support(self) -> tuple[float, float]:
        """Radial support [lo, hi] of the profile (hi is effective for Gaussians)."""
        p = self.params
        if self.shape == "gaussian":
            return 0.0, 8.0 * p[0]
        if self.shape == "bump":
            return p[0] - p[1], p[0] + p[1]
        if self.shape == "annulus":
            return p[0], p[1]
        return min(p[0], p[1]) - p[2], max(p[0], p[1]) + p[2]

    def __str__(self) -> str:
        return self.text


_ProfileBuilder = Callable[[TransformEngine, tuple[float, ...]], NDArray[np.float64]]
_PROFILE_REGISTRY: dict[str, tuple[int, _ProfileBuilder]] = {}


def profile(name: str, arity: int) -> Callable[[_ProfileBuilder], _ProfileBuilder]:
    """Decorator registering a profile builder ``(engine, params) -> g(r_i)``."""
    def decorator(fn: _ProfileBuilder) -> _ProfileBuilder:
        _PROFILE_REGISTRY[name] = (arity, fn)
        return fn
    return decorator


def list_profiles() -> list[str]:
    return list(_PROFILE_REGISTRY.keys())


@profile("gaussian", 1)
def _gaussian(engine: TransformEngine, params: tuple[float, ...]) -> NDArray[np.float64]:
    (width,) = params
    r = engine.physical.radii
    return np.exp(-0.5 * (r / width) ** 2)


@profile("bump", 2)
def _bump(engine: TransformEngine, params: tuple[float, ...]) -> NDArray[np.float64]:
    center, width = params
    return bump_profile(engine.physical.radii, center, width)


@profile("annulus", 2)
def _annulus(engine: TransformEngine, params: tuple[float, ...]) -> NDArray[np.float64]:
    r0, r1 = params
    r = engine.physical.radii
    delta = 0.25 * (r1 - r0)
    return _smooth_step((r - r0) / delta) * _smooth_step((r1 - r) / delta)


@profile("dipole", 3)
def _dipole(engine: TransformEngine, params: tuple[float, ...]) -> NDArray[np.float64]:
    r0, r1, width = params
    r = engine.physical.radii
    first = bump_profile(r, r0, width)
    second = bump_profile(r, r1, width)
    # cancel the grid moment ω Σ w_j h_j r_j^m exactly
    p = engine.op.reduction_power
    weights = engine.radial_measure * r**p
    return first - (weights @ first) / (weights @ second) * second


def parse_data_spec(spec: str) -> DataSpec:
    """Parse a data specification string.

    Raises:
        DataSpecError: On unknown shapes, wrong arity or invalid parameters.
    """
    match = _SPEC_PATTERN.match(spec.strip().lower())
    if match is None:
        raise DataSpecError("malformed data specification", spec)
    shape, arg_text = match.groups()
    if shape not in _PROFILE_REGISTRY:
        available = ", ".join(_PROFILE_REGISTRY.keys())
        raise DataSpecError(f"unknown data shape (available: {available})", spec)
    try:
        params = tuple(float(a) for a in arg_text.split(",")) if arg_text.strip() else ()
    except ValueError:
        raise DataSpecError("data parameters must be numbers", spec) from None
    arity, _ = _PROFILE_REGISTRY[shape]
    if len(params) != arity:
        raise DataSpecError(f"{shape} takes {arity} parameter(s)", spec)
    if not all(np.isfinite(params)):
        raise DataSpecError("data parameters must be finite", spec)

    if shape == "gaussian" and params[0] <= 0.0:
        raise DataSpecError("gaussian width must be positive", spec)
    if shape == "bump":
        center, width = params
        if width <= 0.0 or center < 0.0:
            raise DataSpecError("bump needs center >= 0 and width > 0", spec)
        if 0.0 < center < width:
            raise DataSpecError("off-center bump must not straddle the origin", spec)
    if shape == "annulus" and not 0.0 <= params[0] < params[1]:
        raise DataSpecError("annulus needs 0 <= r0 < r1", spec)
    if shape == "dipole":
        r0, r1, width = params
        if width <= 0.0 or min(r0, r1) - width < 0.0 or abs(r1 - r0) < 2.0 * width:
            raise DataSpecError("dipole needs disjoint bumps inside (0, R)", spec)
    return DataSpec(shape, params)


def check_support(spec: DataSpec, op: ModelOperator, cutoff: float) -> None:
    """Check that the data lives inside (0, R), away from 0 for Hardy operators.

    Raises:
        DataSpecError: If the support reaches R or, for Hardy operators, r = 0.
    """
    lo, hi = spec.support()
    if hi >= cutoff:
        raise DataSpecError(f"data support reaches R = {cutoff:g}", spec.text)
    if op.kind is OperatorKind.HARDY_RADIAL and spec.shape in ("bump", "dipole") and lo <= 0.0:
        raise DataSpecError("bump data for Hardy operators must be supported away from r = 0", spec.text)


def validate_support(spec: DataSpec, engine: TransformEngine) -> None:
    """:func:`check_support` against an engine's operator and cutoff."""
    check_support(spec, engine.op, engine.cutoff)


def sample_data(
    engine: TransformEngine,
    spec: DataSpec | str,
    guard: bool = True,
) -> SampledFunction:
    """Sample a data specification on an engine's grid.

    Args:
        engine: Transform engine (grid and operator).
        spec: Parsed spec or its string form.
        guard: Run :func:`check_resolved` on the result.

    Raises:
        DataSpecError: If the spec is invalid for this grid.
        ResolutionError: If ``guard`` and the data is not resolved.
    """
    if isinstance(spec, str):
        spec = parse_data_spec(spec)
    validate_support(spec, engine)
    _, builder = _PROFILE_REGISTRY[spec.shape]
    f = SampledFunction.from_profile(engine, builder(engine, spec.params))
    if guard:
        check_resolved(f)
    return f


def random_profiles(
    engine: TransformEngine,
    count: int,
    seed: int = 0,
    terms: int = 3,
) -> list[SampledFunction]:
    """Seeded smooth random data: sums of Gaussians with random centers, widths and signs.

    Widths in [0.8, 1.6] keep the data band limited on default grids; each
    center sits at least six widths from the origin so the even extension is smooth.
    """
    rng = np.random.default_rng(seed)
    r = engine.physical.radii
    out = []
    for _ in range(count):
        widths = rng.uniform(0.8, 1.6, size=terms)
        centers = 6.0 * widths + rng.uniform(0.0, 0.25 * engine.cutoff, size=terms)
        amplitudes = rng.uniform(-1.0, 1.0, size=terms)
        values = sum(
            a * np.exp(-0.5 * ((r - c) / w) ** 2) for a, c, w in zip(amplitudes, centers, widths)
        )
        out.append(SampledFunction.from_profile(engine, values))
    return out


__all__ = [
    "DataSpecError",
    "DataSpec",
    "bump_profile",
    "profile",
    "list_profiles",
    "parse_data_spec",
    "check_support",
    "validate_support",
    "sample_data",
    "random_profiles",
]
