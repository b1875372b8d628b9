"""Base class and errors for operator families."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import ClassVar

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .models import ModelOperator, OperatorKind


class OperatorSpecError(ValueError):
    """Raised when an operator specification cannot be turned into an operator.

    Attributes:
        spec: The offending specification string, if any.
    """

    def __init__(self, message: str, spec: str | None = None):
        super().__init__(message)
        self.spec = spec


class SupercriticalCouplingError(OperatorSpecError):
    """Raised for couplings below the critical value λ* (supercritical operators)."""

    def __init__(self, coupling: float, critical_coupling: float, spec: str | None = None):
        super().__init__(
            f"supercritical rejected: λ = {coupling} < λ* = {critical_coupling}", spec
        )
        self.coupling = coupling
        self.critical_coupling = critical_coupling


class UnsupportedKindError(ValueError):
    """Raised when an operation needs a closed form the operator kind lacks."""


class OperatorFamily(ABC):
    """A family of model operators addressed by a specification prefix.

    Subclasses register themselves with ``@operator_family("prefix")`` and
    know how to parse their arguments, which transform diagonalizes them, and
    whether their heat kernel has a closed form.
    """

    kind: ClassVar[OperatorKind]
    grammar: ClassVar[str]
    transform: ClassVar[str]
    description: ClassVar[str] = ""

    @classmethod
    @abstractmethod
    def parse(cls, args: list[str], spec: str) -> ModelOperator:
        """Build an operator from the ``:``-separated arguments after the prefix."""

    @classmethod
    def analytic_sup_alpha(cls, op: ModelOperator) -> float:
        """Endpoint (ν + 1)/2 of I_S for generic data of the implemented sector."""
        return 0.5 * (op.nu + 1.0)

    @classmethod
    def has_heat_kernel(cls) -> bool:
        return False

    @classmethod
    def heat_kernel(cls, op: ModelOperator, distance: ArrayLike, t: ArrayLike) -> NDArray[np.float64]:
        """Closed-form heat kernel p_S(x, y, t) as a function of |x - y|."""
        raise UnsupportedKindError(
            f"unsupported kind: {op.kind.value} has no closed-form heat kernel"
        )


class EuclideanFamily(OperatorFamily):
    """Free Laplacians, whose heat kernel is the Gaussian (4πt)^{-N/2} e^{-d²/4t}."""

    @classmethod
    def has_heat_kernel(cls) -> bool:
        return True

    @classmethod
    def heat_kernel(cls, op: ModelOperator, distance: ArrayLike, t: ArrayLike) -> NDArray[np.float64]:
        d = np.asarray(distance, dtype=float)
        t = np.asarray(t, dtype=float)
        return (4.0 * math.pi * t) ** (-0.5 * op.N) * np.exp(-d * d / (4.0 * t))


__all__ = [
    "OperatorSpecError",
    "SupercriticalCouplingError",
    "UnsupportedKindError",
    "OperatorFamily",
    "EuclideanFamily",
]
