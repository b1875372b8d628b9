"""Continuum spectral density of sampled data.

The sampled profile is compactly supported in (0, R), so its whole-space
transform ĝ(k) is available at every k through the sampling formula of the
forward transform. Long-time heat and wave quantities are integrals of the
spectral density ρ(k) = |ĝ(k)|² k^m against explicit multipliers; they are
evaluated here on a fixed node set instead of the box grid, whose lowest mode
k_1 ~ 1/R would otherwise cap every long-time law.

Node set: u = ln k + k/k_s is sampled uniformly (32 points per decade of k at
small k), which makes the nodes log spaced for k << k_s and uniform with
spacing π/(4R) for k >> k_s. Below the first node ρ is replaced by its fitted
power law c k^q and integrated analytically.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.interpolate import CubicSpline
from scipy.special import gamma, gammainc

from .engines import TransformEngine
from .functions import SampledFunction

K_FLOOR = 1e-6
POINTS_PER_DECADE = 32
# Convergence guard for the exponent test of the small-k end piece.
EXPONENT_GUARD = 1e-6
# Relative size of χ at the first node below which data is non-generic.
GENERIC_THRESHOLD = 1e-8
# Agreement required between the two slopes of the three-point fit.
FIT_SLOPE_TOL = 1e-2


@dataclass(frozen=True, eq=False)
class ContinuumNodes:
    """Quadrature nodes and weights on (0, K] with the transform kernel at each node."""
    frequencies: NDArray[np.float64]
    weights: NDArray[np.float64]
    kernel: NDArray[np.float64]


def _invert_node_map(u: NDArray[np.float64], k_switch: float, k_floor: float) -> NDArray[np.float64]:
    """Solve ln k + k/k_s = u for k (Newton in ln k from the right of the root)."""
    v = np.minimum(u, np.log(k_switch * (u - math.log(k_floor)) + k_floor))
    for _ in range(60):
        ev = np.exp(v) / k_switch
        step = (v + ev - u) / (1.0 + ev)
        v = v - step
        if np.all(np.abs(step) < 1e-15 * np.maximum(1.0, np.abs(v))):
            break
    return np.exp(v)


@functools.lru_cache(maxsize=16)
def continuum_nodes(
    engine: TransformEngine,
    k_floor: float = K_FLOOR,
    points_per_decade: int = POINTS_PER_DECADE,
) -> ContinuumNodes:
    """Composite trapezoid nodes for ∫_{k_floor}^K f(k) dk, cached per engine."""
    du = math.log(10.0) / points_per_decade
    k_max = engine.spectral.band_limit
    k_switch = math.pi / (4.0 * engine.cutoff * du)
    u_lo = math.log(k_floor) + k_floor / k_switch
    u_hi = math.log(k_max) + k_max / k_switch
    count = int(math.ceil((u_hi - u_lo) / du)) + 1
    u = np.linspace(u_lo, u_hi, count)
    step = u[1] - u[0]
    k = _invert_node_map(u, k_switch, k_floor)
    k[0], k[-1] = k_floor, k_max
    weights = step * k * k_switch / (k + k_switch)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    kernel = engine.kernel(k)
    for arr in (k, weights, kernel):
        arr.setflags(write=False)
    return ContinuumNodes(k, weights, kernel)


@functools.lru_cache(maxsize=16)
def _profile_nodes(engine: TransformEngine, spacing_factor: int = 8) -> tuple[NDArray, NDArray]:
    k = np.linspace(0.0, engine.spectral.band_limit, int(math.ceil(
        engine.spectral.band_limit * spacing_factor * engine.cutoff / math.pi)) + 1)
    kernel = engine.scaled_kernel(k)
    k.setflags(write=False)
    kernel.setflags(write=False)
    return k, kernel


@dataclass(frozen=True, eq=False)
class SpectralDensity:
    """ρ(k) = |ĝ(k)|² k^m on continuum nodes with its small-k power law ρ ≈ c k^q.

    Attributes:
        function: The sampled data.
        frequencies: Node frequencies.
        weights: Trapezoid weights.
        rho: Density at the nodes.
        exponent: Fitted small-k exponent q.
        coefficient: Fitted c.
        fit_reliable: Whether the three-point fit is a clean power law.
        non_generic: Whether χ(k) = ĝ(k)/k^{ν_e} vanishes at k → 0.
    """
    function: SampledFunction
    frequencies: NDArray[np.float64]
    weights: NDArray[np.float64]
    rho: NDArray[np.float64]
    exponent: float
    coefficient: float
    fit_reliable: bool
    non_generic: bool

    @classmethod
    def from_function(
        cls,
        f: SampledFunction,
        k_floor: float = K_FLOOR,
        points_per_decade: int = POINTS_PER_DECADE,
    ) -> "SpectralDensity":
        nodes = continuum_nodes(f.engine, k_floor, points_per_decade)
        transform = nodes.kernel @ (f.engine.radial_measure * f.samples)
        k = nodes.frequencies
        rho = np.abs(transform) ** 2 * k ** f.engine.measure_exponent
        rho.setflags(write=False)

        generic_exponent = 2.0 * f.engine.profile_order + f.engine.measure_exponent
        head = rho[:3]
        if np.all(head > 0.0):
            logk = np.log(k[:3])
            logr = np.log(head)
            q, _ = np.polyfit(logk, logr, 1)
            slopes = np.diff(logr) / np.diff(logk)
            reliable = bool(abs(slopes[0] - slopes[1]) < FIT_SLOPE_TOL * max(1.0, abs(q)))
            c = float(head[0] / k[0] ** q)
        else:
            q, c, reliable = generic_exponent, 0.0, bool(not np.any(head))

        chi = np.abs(transform) / k ** f.engine.profile_order
        peak = chi.max() if chi.size else 0.0
        non_generic = bool(peak > 0.0 and chi[0] < GENERIC_THRESHOLD * peak)
        if non_generic:
            warnings.warn(
                "data has a vanishing low-frequency moment; it does not witness the endpoint of I_S",
                stacklevel=2,
            )
        return cls(f, k, nodes.weights, rho, float(q), c, reliable, non_generic)

    @property
    def omega(self) -> float:
        return self.function.op.sphere_measure

    @property
    def k_floor(self) -> float:
        return float(self.frequencies[0])

    def is_zero(self) -> bool:
        return not np.any(self.rho)

    def end_exponent(self, power: float) -> float:
        """q + p + 1, the convergence exponent of ∫_0 k^p ρ dk."""
        return self.exponent + power + 1.0

    def converges(self, power: float) -> bool:
        return self.end_exponent(power) > EXPONENT_GUARD

    def moment_integral(self, power: float) -> float:
        """ω ∫_0^K k^p ρ(k) dk, or ``inf`` when the small-k exponent test fails."""
        if self.is_zero():
            return 0.0
        if not self.converges(power):
            return math.inf
        body = float(np.sum(self.weights * self.frequencies**power * self.rho))
        e = self.end_exponent(power)
        end = self.coefficient * self.k_floor**e / e
        return self.omega * (body + end)

    def heat_norms_squared(self, t: ArrayLike) -> NDArray[np.float64]:
        """ω ∫ e^{-2tk²} ρ(k) dk for every t (‖e^{-tS}g‖² on the whole space)."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        k2 = self.frequencies**2
        body = np.exp(-2.0 * np.outer(t, k2)) @ (self.weights * self.rho)
        a = 0.5 * (self.exponent + 1.0)
        x = 2.0 * t * self.k_floor**2
        with np.errstate(divide="ignore", invalid="ignore"):
            end = np.where(
                t > 0.0,
                0.5 * self.coefficient * gamma(a) * gammainc(a, x) / np.power(np.maximum(2.0 * t, 1e-300), a),
                self.coefficient * self.k_floor ** (2 * a) / (2 * a),
            )
        return self.omega * (body + end)


@functools.lru_cache(maxsize=128)
def spectral_density(
    f: SampledFunction,
    k_floor: float = K_FLOOR,
    points_per_decade: int = POINTS_PER_DECADE,
) -> SpectralDensity:
    """Cached :meth:`SpectralDensity.from_function`."""
    return SpectralDensity.from_function(f, k_floor, points_per_decade)


class ProfileSpline:
    """Cubic spline of the even entire profile χ(k) = ĝ(k)/k^{ν_e} on [0, K].

    Clamped to zero slope at k = 0 (χ is even). Complex data is splined in its
    real and imaginary parts.
    """

    def __init__(self, f: SampledFunction, spacing_factor: int = 8):
        k, kernel = _profile_nodes(f.engine, spacing_factor)
        chi = kernel @ (f.engine.radial_measure * f.samples)
        self.function = f
        self.band_limit = float(k[-1])
        self.exponent = 2.0 * f.engine.profile_order + f.engine.measure_exponent
        self._parts = [CubicSpline(k, np.real(chi), bc_type=((1, 0.0), "not-a-knot"))]
        if np.iscomplexobj(chi) and np.any(np.imag(chi)):
            self._parts.append(CubicSpline(k, np.imag(chi), bc_type=((1, 0.0), "not-a-knot")))

    def chi_squared(self, k: ArrayLike) -> NDArray[np.float64]:
        """|χ(k)|²."""
        k = np.asarray(k, dtype=float)
        return sum(part(k) ** 2 for part in self._parts)

    def rho(self, k: ArrayLike) -> NDArray[np.float64]:
        """|ĝ(k)|² k^m = |χ(k)|² k^e."""
        k = np.asarray(k, dtype=float)
        return self.chi_squared(k) * k**self.exponent


__all__ = [
    "K_FLOOR",
    "POINTS_PER_DECADE",
    "EXPONENT_GUARD",
    "ContinuumNodes",
    "continuum_nodes",
    "SpectralDensity",
    "spectral_density",
    "ProfileSpline",
]
