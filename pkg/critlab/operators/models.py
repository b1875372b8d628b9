"""Pydantic models for the model operator family."""

from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from ..special import sphere_area

# Slack when comparing a coupling against its critical value.
COUPLING_TOL = 1e-12


class OperatorKind(str, Enum):
    """Exactly diagonalizable model families."""
    FREE_LINE = "FreeLine1D"
    FREE_RADIAL = "FreeRadial"
    HARDY_RADIAL = "HardyRadial"


class Verdict(str, Enum):
    """Criticality of a nonnegative Schrödinger operator."""
    SUBCRITICAL = "Subcritical"
    CRITICAL = "Critical"


class ModelOperator(BaseModel):
    """S = -Δ + λ/|x|² on R^N, restricted to the even (N = 1) or radial sector.

    The radial kinds are diagonalized by the Hankel transform of order
    ν = sqrt(((N-2)/2)² + λ) acting on the reduced profile r^{(N-2)/2} g.
    The line uses the cosine transform, recorded here as the order -1/2.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: OperatorKind = Field(description="Model family.")
    N: int = Field(ge=1, description="Space dimension.")
    coupling: float = Field(
        default=0.0,
        alias="lambda",
        description="Coupling λ of the inverse-square potential (0 for free kinds).",
    )

    @computed_field
    @property
    def lambda_star(self) -> float:
        """Critical coupling -((N-2)/2)², the negative optimal Hardy constant."""
        return -(((self.N - 2) / 2.0) ** 2)

    @computed_field
    @property
    def nu(self) -> float:
        """Bessel order of the diagonalizing transform (-1/2 on the line)."""
        if self.kind is OperatorKind.FREE_LINE:
            return -0.5
        return math.sqrt(max(((self.N - 2) / 2.0) ** 2 + self.coupling, 0.0))

    @property
    def is_radial(self) -> bool:
        return self.kind is not OperatorKind.FREE_LINE

    @property
    def reduction_power(self) -> float:
        """Exponent (N-2)/2 of the reduction h = r^{(N-2)/2} g (0 on the line)."""
        return (self.N - 2) / 2.0 if self.is_radial else 0.0

    @property
    def sphere_measure(self) -> float:
        """ω_{N-1}, with ω_0 = 2 for the even sector of the line."""
        return sphere_area(self.N - 1)

    @property
    def spec(self) -> str:
        """Canonical specification string (``free1d``, ``free:N``, ``hardy:N:λ``)."""
        if self.kind is OperatorKind.FREE_LINE:
            return "free1d"
        if self.kind is OperatorKind.FREE_RADIAL:
            return f"free:{self.N}"
        return f"hardy:{self.N}:{self.coupling + 0.0:g}"

    @model_validator(mode="after")
    def _check_family(self) -> "ModelOperator":
        if self.kind is OperatorKind.FREE_LINE and self.N != 1:
            raise ValueError("FreeLine1D requires N = 1")
        if self.is_radial and self.N < 2:
            raise ValueError(f"{self.kind.value} requires N >= 2")
        if self.kind is not OperatorKind.HARDY_RADIAL and self.coupling != 0.0:
            raise ValueError(f"{self.kind.value} has no coupling")
        if self.coupling < self.lambda_star - COUPLING_TOL:
            raise ValueError(
                f"coupling {self.coupling} is below the critical value {self.lambda_star}"
            )
        return self

    def __str__(self) -> str:
        return self.spec


class Classification(BaseModel):
    """Analytic criticality verdict and endpoint of I_S."""
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    analytic_sup_alpha: float = Field(description="sup I_S in the implemented sector.")
    endpoint_included: bool = Field(default=False)
    sector: str = Field(description="Sector the endpoint is stated for ('even' or 'radial').")


__all__ = ["COUPLING_TOL", "OperatorKind", "Verdict", "ModelOperator", "Classification"]
