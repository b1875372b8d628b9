"""Built-in experiment steps; importing this package registers them."""

from .seminorm import SeminormStep
from .scan import ScanStep
from .wave import WaveStep
from .heat import HeatStep
from .green import GreenStep
from .transmute import TransmuteStep
from .verify import VerifyStep

__all__ = [
    "SeminormStep",
    "ScanStep",
    "WaveStep",
    "HeatStep",
    "GreenStep",
    "TransmuteStep",
    "VerifyStep",
]
