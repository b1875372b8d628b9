"""Sampled functions on matched grids and the transform operations between them."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..guards import ResolutionError
from ..operators import ModelOperator
from .engines import PhysicalGrid, SpectralGrid, TransformEngine

# Relative spectral amplitude near K above which data counts as unresolved.
BAND_GUARD = 1e-3
BAND_WARN = 1e-6
# Relative amplitude at R above which the decay warning is emitted.
DECAY_WARN = 1e-12


class GridMismatchError(ValueError):
    """Raised when a function is used with an operator or grid it was not built for."""


def _readonly(values: ArrayLike) -> NDArray:
    arr = np.array(values)
    if not np.iscomplexobj(arr):
        arr = arr.astype(float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """A radial (or even) profile stored as its reduced samples h(r_i) = r_i^{(N-2)/2} g(r_i)."""
    engine: TransformEngine
    samples: NDArray

    def __post_init__(self) -> None:
        samples = _readonly(self.samples)
        if samples.shape != (self.engine.size,):
            raise GridMismatchError(
                f"expected {self.engine.size} samples, got shape {samples.shape}"
            )
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_profile(cls, engine: TransformEngine, values: ArrayLike) -> "SampledFunction":
        """Wrap physical values g(r_i) by applying the reduction."""
        r = engine.physical.radii
        return cls(engine, np.asarray(values) * r ** engine.op.reduction_power)

    @classmethod
    def zeros(cls, engine: TransformEngine) -> "SampledFunction":
        return cls(engine, np.zeros(engine.size))

    @property
    def op(self) -> ModelOperator:
        return self.engine.op

    @property
    def grid(self) -> PhysicalGrid:
        return self.engine.physical

    @property
    def values(self) -> NDArray:
        """Physical profile g(r_i)."""
        return self.samples / self.grid.radii ** self.op.reduction_power

    def norm_squared(self) -> float:
        """ω_{N-1} Σ w_i |h_i|² r_i^m, the grid value of ‖g‖²_{L²}."""
        return float(self.op.sphere_measure * np.sum(self.engine.radial_measure * np.abs(self.samples) ** 2))

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def is_zero(self) -> bool:
        return not np.any(self.samples)

    def __add__(self, other: "SampledFunction") -> "SampledFunction":
        _require_same_engine(self.engine, other.engine)
        return SampledFunction(self.engine, self.samples + other.samples)

    def __sub__(self, other: "SampledFunction") -> "SampledFunction":
        _require_same_engine(self.engine, other.engine)
        return SampledFunction(self.engine, self.samples - other.samples)

    def __mul__(self, scalar: complex) -> "SampledFunction":
        return SampledFunction(self.engine, scalar * self.samples)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class SpectralFunction:
    """Transform samples ĝ(k_i) on the spectral grid of an engine."""
    engine: TransformEngine
    samples: NDArray

    def __post_init__(self) -> None:
        samples = _readonly(self.samples)
        if samples.shape != (self.engine.size,):
            raise GridMismatchError(
                f"expected {self.engine.size} samples, got shape {samples.shape}"
            )
        object.__setattr__(self, "samples", samples)

    @property
    def op(self) -> ModelOperator:
        return self.engine.op

    @property
    def grid(self) -> SpectralGrid:
        return self.engine.spectral

    def norm_squared(self) -> float:
        """ω_{N-1} Σ v_i |ĝ_i|² k_i^m."""
        return float(self.op.sphere_measure * np.sum(self.engine.spectral_measure * np.abs(self.samples) ** 2))

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())


def _require_same_engine(a: TransformEngine, b: TransformEngine) -> None:
    if a is not b:
        raise GridMismatchError(f"functions live on different grids: {a!r} vs {b!r}")


def require_operator(f: SampledFunction | SpectralFunction, op: ModelOperator) -> None:
    """Raise GridMismatchError unless ``f`` was built for ``op``."""
    if f.op != op:
        raise GridMismatchError(f"function belongs to {f.op.spec}, not {op.spec}")


def forward(f: SampledFunction) -> SpectralFunction:
    """Transform a sampled profile to the spectral grid."""
    return SpectralFunction(f.engine, f.engine.forward(f.samples))


def inverse(F: SpectralFunction) -> SampledFunction:
    """Transform spectral samples back to the physical grid."""
    return SampledFunction(F.engine, F.engine.inverse(F.samples))


def apply_multiplier(
    F: SpectralFunction, multiplier: Callable[[NDArray[np.float64]], ArrayLike] | ArrayLike
) -> SpectralFunction:
    """Multiply spectral samples pointwise by m(k_i).

    Args:
        F: Spectral function.
        multiplier: Callable of the frequency array, or precomputed values.

    Raises:
        ValueError: If the multiplier is not finite on the grid.
    """
    k = F.grid.frequencies
    values = multiplier(k) if callable(multiplier) else multiplier
    values = np.broadcast_to(np.asarray(values), k.shape)
    if not np.all(np.isfinite(values)):
        raise ValueError("multiplier has non-finite values on the spectral grid")
    return SpectralFunction(F.engine, values * F.samples)


def transform_at(f: SampledFunction, k: ArrayLike) -> NDArray:
    """Whole-space transform ĝ(k) of the sampled profile at arbitrary k ≥ 0."""
    k = np.atleast_1d(np.asarray(k, dtype=float))
    return f.engine.kernel(k) @ (f.engine.radial_measure * f.samples)


def check_resolved(f: SampledFunction) -> float:
    """Check that the data is resolved by the grid.

    Returns:
        Relative spectral amplitude in the top tenth of the band.

    Raises:
        ResolutionError: If that amplitude exceeds 1e-3 of the peak.
    """
    if f.is_zero():
        return 0.0
    spectrum = np.abs(f.engine.forward(f.samples))
    k = f.engine.spectral.frequencies
    peak = spectrum.max()
    tail = spectrum[k >= 0.9 * f.engine.spectral.band_limit].max() / peak
    if tail > BAND_GUARD:
        raise ResolutionError(
            f"data is not band limited on {f.engine!r}: spectral tail {tail:.2e} of peak near K",
            needed_m=2 * f.engine.size,
        )
    if tail > BAND_WARN:
        warnings.warn(
            f"spectral tail {tail:.2e} of peak near K on {f.engine!r}; results may be inaccurate",
            stacklevel=2,
        )
    amplitude = np.abs(f.values)
    outer = amplitude[f.grid.radii >= 0.95 * f.grid.cutoff].max() / amplitude.max()
    if outer > DECAY_WARN:
        warnings.warn(
            f"profile has not decayed below {DECAY_WARN:g} at R = {f.grid.cutoff:g} "
            f"(relative amplitude {outer:.2e})",
            stacklevel=2,
        )
    return float(tail)


__all__ = [
    "BAND_GUARD",
    "GridMismatchError",
    "SampledFunction",
    "SpectralFunction",
    "require_operator",
    "forward",
    "inverse",
    "apply_multiplier",
    "transform_at",
    "check_resolved",
]
