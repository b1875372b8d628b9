"""Special functions: Bessel J of real order, its zeros, and the wave multiplier."""

from .bessel import (
    MAX_ORDER,
    SERIES_LIMIT,
    BesselDomainError,
    crossover_point,
    bessel_j,
    bessel_j_scaled,
    bessel_zeros,
    wave_multiplier,
    sphere_area,
)

__all__ = [
    "MAX_ORDER",
    "SERIES_LIMIT",
    "BesselDomainError",
    "crossover_point",
    "bessel_j",
    "bessel_j_scaled",
    "bessel_zeros",
    "wave_multiplier",
    "sphere_area",
]
