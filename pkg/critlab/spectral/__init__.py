"""Diagonalizing transforms, sampled functions and continuum spectral densities."""

from .engines import (
    MIN_GRID_SIZE,
    GridError,
    PhysicalGrid,
    SpectralGrid,
    TransformEngine,
    transform,
    TransformFactory,
    HankelEngine,
    CosineEngine,
    build_grids,
)
from .functions import (
    BAND_GUARD,
    GridMismatchError,
    SampledFunction,
    SpectralFunction,
    require_operator,
    forward,
    inverse,
    apply_multiplier,
    transform_at,
    check_resolved,
)
from .density import (
    K_FLOOR,
    POINTS_PER_DECADE,
    EXPONENT_GUARD,
    ContinuumNodes,
    continuum_nodes,
    SpectralDensity,
    spectral_density,
    ProfileSpline,
)
from .profiles import (
    DataSpecError,
    DataSpec,
    bump_profile,
    profile,
    list_profiles,
    parse_data_spec,
    check_support,
    validate_support,
    sample_data,
    random_profiles,
)

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
    "K_FLOOR",
    "POINTS_PER_DECADE",
    "EXPONENT_GUARD",
    "ContinuumNodes",
    "continuum_nodes",
    "SpectralDensity",
    "spectral_density",
    "ProfileSpline",
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
