"""The heat semigroup, range seminorms, α-scans and generalized Green kernels."""

from ..operators import UnsupportedKindError
from .results import (
    SeminormVerdict,
    NotApplicableError,
    SeminormResult,
    IntervalEstimate,
    GreenKernelResult,
)
from .heat import heat_evolve, heat_norm, heat_decay_rate
from .seminorm import (
    T_MIN,
    T_MAX,
    classify_tail,
    time_grid,
    seminorm_time,
    seminorm_freq,
    range_inner,
    preimage_norm,
)
from .scan import InconclusiveScanError, alpha_grid, bracket, scan_interval
from .green import riesz_kernel, green_kernel_alpha

__all__ = [
    "UnsupportedKindError",
    "SeminormVerdict",
    "NotApplicableError",
    "SeminormResult",
    "IntervalEstimate",
    "GreenKernelResult",
    "heat_evolve",
    "heat_norm",
    "heat_decay_rate",
    "T_MIN",
    "T_MAX",
    "classify_tail",
    "time_grid",
    "seminorm_time",
    "seminorm_freq",
    "range_inner",
    "preimage_norm",
    "InconclusiveScanError",
    "alpha_grid",
    "bracket",
    "scan_interval",
    "riesz_kernel",
    "green_kernel_alpha",
]
