"""Wave propagation, growth laws and the heat/wave/range identities."""

from ..semigroup import NotApplicableError
from .propagator import WaveState, propagate, wave_evolve, energy, wave_norm_grid, wave_norm
from .decay import (
    MIN_FIT_POINTS,
    DegenerateFitError,
    GrowthKind,
    GrowthModel,
    DecayCurve,
    fit_growth_models,
    best_model,
    decay_curve,
)
from .identities import (
    SIGMA_POINTS,
    TRANSMUTATION_TOL,
    INTERPOLATION_SLACK,
    transmutation_check,
    InterpolationResult,
    interpolation_check,
    HeatBoundCheck,
    heat_bound_from_wave,
    dissipation_check,
)
from .reduction import reduce_to_2d, restore_from_2d, moment

__all__ = [
    "NotApplicableError",
    "WaveState",
    "propagate",
    "wave_evolve",
    "energy",
    "wave_norm_grid",
    "wave_norm",
    "MIN_FIT_POINTS",
    "DegenerateFitError",
    "GrowthKind",
    "GrowthModel",
    "DecayCurve",
    "fit_growth_models",
    "best_model",
    "decay_curve",
    "SIGMA_POINTS",
    "TRANSMUTATION_TOL",
    "INTERPOLATION_SLACK",
    "transmutation_check",
    "InterpolationResult",
    "interpolation_check",
    "HeatBoundCheck",
    "heat_bound_from_wave",
    "dissipation_check",
    "reduce_to_2d",
    "restore_from_2d",
    "moment",
]
