"""Construction, parsing and analytic classification of model operators."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .base import OperatorSpecError, SupercriticalCouplingError
from .models import COUPLING_TOL, Classification, ModelOperator, OperatorKind, Verdict
from .registry import family_for_kind, get_operator_family


def make_operator(kind: OperatorKind | str, N: int, coupling: float = 0.0) -> ModelOperator:
    """Build a validated model operator.

    Args:
        kind: Model family (enum member or its value, e.g. ``"HardyRadial"``).
        N: Space dimension.
        coupling: Coupling λ of the inverse-square potential.

    Returns:
        A frozen ModelOperator with derived ν and λ*.

    Raises:
        OperatorSpecError: For invalid kind/dimension combinations.
        SupercriticalCouplingError: If λ < λ*.
    """
    try:
        kind = OperatorKind(kind)
    except ValueError:
        raise OperatorSpecError(f"unknown operator kind '{kind}'") from None
    if not math.isfinite(coupling):
        raise OperatorSpecError(f"coupling must be finite, got {coupling}")
    if kind is OperatorKind.FREE_LINE and N != 1:
        raise OperatorSpecError(f"FreeLine1D requires N = 1, got N = {N}")
    if kind is not OperatorKind.FREE_LINE and N < 2:
        raise OperatorSpecError(f"{kind.value} requires N >= 2, got N = {N}")
    if kind is not OperatorKind.HARDY_RADIAL and coupling != 0.0:
        raise OperatorSpecError(f"{kind.value} has no coupling, got λ = {coupling}")
    lambda_star = -(((N - 2) / 2.0) ** 2)
    if coupling < lambda_star - COUPLING_TOL:
        raise SupercriticalCouplingError(coupling, lambda_star)
    # snap to λ* so that ν is exactly 0 at the critical coupling; + 0.0 drops the sign of -0.0
    if abs(coupling - lambda_star) <= COUPLING_TOL:
        coupling = lambda_star + 0.0
    return ModelOperator(kind=kind, N=N, coupling=coupling)


def parse_operator(spec: str) -> ModelOperator:
    """Parse ``free1d``, ``free:N`` or ``hardy:N:lambda``."""
    text = spec.strip().lower()
    if not text:
        raise OperatorSpecError("empty operator specification", spec)
    prefix, *args = text.split(":")
    try:
        family = get_operator_family(prefix)
    except KeyError as e:
        raise OperatorSpecError(str(e.args[0]), spec) from None
    try:
        return family.parse(args, spec)
    except OperatorSpecError as e:
        if e.spec is None:
            e.spec = spec
        raise


def classify(op: ModelOperator) -> Classification:
    """Analytic classification: sup I_S = (ν+1)/2, subcritical iff it exceeds 1/2."""
    family = family_for_kind(op.kind)
    sup_alpha = family.analytic_sup_alpha(op)
    verdict = Verdict.SUBCRITICAL if sup_alpha > 0.5 + 1e-12 else Verdict.CRITICAL
    return Classification(
        verdict=verdict,
        analytic_sup_alpha=sup_alpha,
        endpoint_included=False,
        sector="radial" if op.is_radial else "even",
    )


def heat_kernel(op: ModelOperator, distance: ArrayLike, t: ArrayLike) -> NDArray[np.float64]:
    """Closed-form heat kernel of ``op`` as a function of |x - y|.

    Raises:
        UnsupportedKindError: For kinds without a closed form.
    """
    return family_for_kind(op.kind).heat_kernel(op, distance, t)


def has_heat_kernel(op: ModelOperator) -> bool:
    return family_for_kind(op.kind).has_heat_kernel()


__all__ = ["make_operator", "parse_operator", "classify", "heat_kernel", "has_heat_kernel"]
