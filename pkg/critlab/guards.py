"""Numerical guard errors shared by every layer of the laboratory.

A guard trips when a computation would silently return a number that the
discretization cannot support. The CLI maps every subclass of
:class:`NumericalGuardError` to exit code 2.
"""

from __future__ import annotations


class NumericalGuardError(RuntimeError):
    """Base class for tripped numerical guards."""


class ResolutionError(NumericalGuardError):
    """Raised when grid resolution is insufficient for the requested data.

    Attributes:
        needed_m: Smallest grid size expected to pass the guard, if known.
    """

    def __init__(self, message: str, needed_m: int | None = None):
        if needed_m is not None:
            message = f"{message} (increase grid size to M >= {needed_m})"
        super().__init__(message)
        self.needed_m = needed_m


class ResolutionExhaustedError(NumericalGuardError):
    """Raised when all computed norms underflow the working tolerance."""


class QuadratureError(NumericalGuardError):
    """Raised when a quadrature sees non-finite values or fails its error estimate.

    Attributes:
        estimate: Estimated relative error, if available.
        tolerance: Target tolerance the estimate was checked against.
    """

    def __init__(self, message: str, estimate: float | None = None, tolerance: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.tolerance = tolerance


__all__ = [
    "NumericalGuardError",
    "ResolutionError",
    "ResolutionExhaustedError",
    "QuadratureError",
]
