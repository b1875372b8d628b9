"""Diagonalizing transform engines and their factory.

Every model operator becomes the multiplier k² under one of two engines:

* ``hankel``: order-ν quasi-discrete Hankel transform on Bessel-zero grids,
  acting on the reduced profile h = r^{(N-2)/2} g with measure r dr.
* ``cosine``: type-IV cosine transform on midpoint grids for the even sector
  of the line, measure dr.

Engines are immutable after construction and cached per (operator, M, R).
"""

from __future__ import annotations

import functools
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, ClassVar, TypeVar

import numpy as np
from absl import logging
from numpy.typing import NDArray
from scipy.fft import dct
from scipy.linalg import polar

from ..operators import ModelOperator, family_for_kind
from ..special import bessel_j, bessel_j_scaled, bessel_zeros

MIN_GRID_SIZE = 16


class GridError(ValueError):
    """Raised for invalid grid parameters."""


def _frozen(values: NDArray[np.float64]) -> NDArray[np.float64]:
    values = np.array(values, dtype=float)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class PhysicalGrid:
    """Radii r_i in (0, R) with quadrature weights w_i (∫ f r^m dr ≈ Σ w_i f_i r_i^m)."""
    radii: NDArray[np.float64]
    weights: NDArray[np.float64]
    cutoff: float
    dimension: int

    def __len__(self) -> int:
        return len(self.radii)


@dataclass(frozen=True, eq=False)
class SpectralGrid:
    """Frequencies k_i in (0, K) with weights v_i."""
    frequencies: NDArray[np.float64]
    weights: NDArray[np.float64]
    band_limit: float

    def __len__(self) -> int:
        return len(self.frequencies)


class TransformEngine(ABC):
    """A discrete transform that diagonalizes one model operator.

    Attributes:
        op: The operator the engine diagonalizes.
        size: Number of grid points M.
        cutoff: Domain truncation R.
        physical: Physical grid.
        spectral: Spectral grid.
        measure_exponent: m in the measures r^m dr and k^m dk.
        profile_order: exponent ν_e with ĝ(k) = k^{ν_e} χ(k), χ even and entire.
    """

    name: ClassVar[str]
    measure_exponent: ClassVar[int]

    def __init__(self, op: ModelOperator, size: int, cutoff: float):
        if size < MIN_GRID_SIZE:
            raise GridError(f"grid size M must be at least {MIN_GRID_SIZE}, got {size}")
        if not (cutoff > 0.0 and math.isfinite(cutoff)):
            raise GridError(f"domain cutoff R must be positive, got {cutoff}")
        self.op = op
        self.size = int(size)
        self.cutoff = float(cutoff)
        self.physical, self.spectral = self._build()

    @property
    def profile_order(self) -> float:
        return max(self.op.nu, 0.0)

    @property
    def radial_measure(self) -> NDArray[np.float64]:
        """w_j r_j^m, the weights multiplying reduced samples in every sum."""
        return self.physical.weights * self.physical.radii ** self.measure_exponent

    @property
    def spectral_measure(self) -> NDArray[np.float64]:
        """v_i k_i^m."""
        return self.spectral.weights * self.spectral.frequencies ** self.measure_exponent

    @abstractmethod
    def _build(self) -> tuple[PhysicalGrid, SpectralGrid]:
        ...

    @abstractmethod
    def forward(self, samples: NDArray) -> NDArray:
        """Reduced physical samples → spectral samples."""

    @abstractmethod
    def inverse(self, samples: NDArray) -> NDArray:
        """Spectral samples → reduced physical samples."""

    @abstractmethod
    def kernel(self, k: NDArray[np.float64]) -> NDArray[np.float64]:
        """Matrix K with ĝ(k) = K @ (radial_measure · h) at arbitrary k ≥ 0."""

    @abstractmethod
    def scaled_kernel(self, k: NDArray[np.float64]) -> NDArray[np.float64]:
        """Matrix with χ(k) = ĝ(k)/k^{ν_e} = K @ (radial_measure · h), finite at k = 0."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}(op={self.op.spec}, M={self.size}, R={self.cutoff:g})"


E = TypeVar("E", bound=TransformEngine)


def transform(name: str) -> Callable[[type[E]], type[E]]:
    """Decorator to register an engine class with the factory.

    Usage:
        @transform("hankel")
        class HankelEngine(TransformEngine):
            ...
    """
    def decorator(cls: type[E]) -> type[E]:
        TransformFactory.register(name, cls)
        return cls
    return decorator


class TransformFactory:
    """Registry-backed factory returning cached engines for an operator."""

    _engine_registry: dict[str, type[TransformEngine]] = {}

    @classmethod
    def register(cls, name: str, engine_class: type[TransformEngine]) -> None:
        cls._engine_registry[name] = engine_class

    @classmethod
    def get_available_engines(cls) -> list[str]:
        return list(cls._engine_registry.keys())

    @classmethod
    def create(cls, op: ModelOperator, size: int = 512, cutoff: float = 40.0) -> TransformEngine:
        """Return the (cached) engine diagonalizing ``op`` on an (M, R) grid.

        Raises:
            GridError: For invalid grid parameters or an unknown engine.
        """
        return _create_engine(op, int(size), float(cutoff))


@functools.lru_cache(maxsize=32)
def _create_engine(op: ModelOperator, size: int, cutoff: float) -> TransformEngine:
    name = family_for_kind(op.kind).transform
    engine_class = TransformFactory._engine_registry.get(name)
    if engine_class is None:
        available = ", ".join(TransformFactory._engine_registry.keys()) or "none"
        raise GridError(f"Unsupported transform '{name}'. Available: {available}")
    logging.info("Building %s transform for %s (M=%d, R=%g)", name, op.spec, size, cutoff)
    return engine_class(op, size, cutoff)


@transform("hankel")
class HankelEngine(TransformEngine):
    """Quasi-discrete Hankel transform of order ν.

    With j_1 < ... < j_{M+1} the zeros of J_ν and S = j_{M+1}:
    r_i = j_i R/S, k_i = j_i/R, K = S/R. The symmetric kernel
    T_ij = 2 J_ν(j_i j_j / S) / (S |J_{ν+1}(j_i)| |J_{ν+1}(j_j)|) is replaced
    by its orthogonal polar factor, so forward and inverse are exact mutual
    inverses and Plancherel holds to rounding.
    """

    measure_exponent = 1

    def _build(self) -> tuple[PhysicalGrid, SpectralGrid]:
        nu = self.op.nu
        zeros = bessel_zeros(nu, self.size + 1)
        s = zeros[-1]
        j = zeros[:-1]
        big_k = s / self.cutoff
        j_next = np.abs(bessel_j(nu + 1.0, j))

        radii = j * self.cutoff / s
        frequencies = j / self.cutoff
        weights_r = 2.0 / (big_k**2 * j_next**2 * radii)
        weights_k = 2.0 / (self.cutoff**2 * j_next**2 * frequencies)

        raw = 2.0 * bessel_j(nu, np.outer(j, j) / s) / (s * np.outer(j_next, j_next))
        unitary, _ = polar(raw)
        self._matrix = _frozen(0.5 * (unitary + unitary.T))
        self._a = _frozen(np.sqrt(weights_r * radii))
        self._b = _frozen(np.sqrt(weights_k * frequencies))

        physical = PhysicalGrid(_frozen(radii), _frozen(weights_r), self.cutoff, self.op.N)
        spectral = SpectralGrid(_frozen(frequencies), _frozen(weights_k), float(big_k))
        return physical, spectral

    def forward(self, samples: NDArray) -> NDArray:
        return (self._matrix @ (self._a * samples)) / self._b

    def inverse(self, samples: NDArray) -> NDArray:
        return (self._matrix @ (self._b * samples)) / self._a

    def kernel(self, k: NDArray[np.float64]) -> NDArray[np.float64]:
        return bessel_j(self.op.nu, np.outer(np.asarray(k, dtype=float), self.physical.radii))

    def scaled_kernel(self, k: NDArray[np.float64]) -> NDArray[np.float64]:
        nu = self.op.nu
        r = self.physical.radii
        return bessel_j_scaled(nu, np.outer(np.asarray(k, dtype=float), r)) * r**nu


def _dct4(samples: NDArray) -> NDArray:
    if np.iscomplexobj(samples):
        return _dct4(samples.real) + 1j * _dct4(samples.imag)
    return dct(np.asarray(samples, dtype=float), type=4, norm="ortho")


@transform("cosine")
class CosineEngine(TransformEngine):
    """Cosine transform of even functions on the line.

    Midpoint grids r_j = (j - 1/2) R/M and k_i = (i - 1/2) π/R make the
    transform a scaled orthonormal DCT-IV, which is its own inverse.
    """

    measure_exponent = 0

    @property
    def profile_order(self) -> float:
        return 0.0

    def _build(self) -> tuple[PhysicalGrid, SpectralGrid]:
        index = np.arange(1, self.size + 1) - 0.5
        radii = index * self.cutoff / self.size
        frequencies = index * math.pi / self.cutoff
        self._scale = self.cutoff / math.sqrt(math.pi * self.size)
        physical = PhysicalGrid(
            _frozen(radii), _frozen(np.full(self.size, self.cutoff / self.size)), self.cutoff, 1
        )
        spectral = SpectralGrid(
            _frozen(frequencies),
            _frozen(np.full(self.size, math.pi / self.cutoff)),
            self.size * math.pi / self.cutoff,
        )
        return physical, spectral

    def forward(self, samples: NDArray) -> NDArray:
        return self._scale * _dct4(samples)

    def inverse(self, samples: NDArray) -> NDArray:
        return _dct4(samples) / self._scale

    def kernel(self, k: NDArray[np.float64]) -> NDArray[np.float64]:
        return math.sqrt(2.0 / math.pi) * np.cos(np.outer(np.asarray(k, dtype=float), self.physical.radii))

    def scaled_kernel(self, k: NDArray[np.float64]) -> NDArray[np.float64]:
        return self.kernel(k)


def build_grids(op: ModelOperator, M: int = 512, R: float = 40.0) -> tuple[PhysicalGrid, SpectralGrid]:
    """Matched physical and spectral grids for ``op``.

    Raises:
        GridError: If M < 16 or R <= 0.
    """
    engine = TransformFactory.create(op, M, R)
    return engine.physical, engine.spectral


__all__ = [
    "MIN_GRID_SIZE",
    "GridError",
    "PhysicalGrid",
    "SpectralGrid",
    "TransformEngine",
    "transform",
    "TransformFactory",
    "HankelEngine",
    "CosineEngine",
    "build_grids",
]
