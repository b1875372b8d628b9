"""Exactly diagonalizable model operators and their analytic classification."""

from .models import COUPLING_TOL, OperatorKind, Verdict, ModelOperator, Classification
from .base import (
    OperatorSpecError,
    SupercriticalCouplingError,
    UnsupportedKindError,
    OperatorFamily,
)
from .registry import (
    operator_family,
    register_operator_family,
    get_operator_family,
    family_for_kind,
    list_operator_families,
)
from .factory import make_operator, parse_operator, classify, heat_kernel, has_heat_kernel

# Import families to trigger their @operator_family decorators.
from . import families  # noqa: F401

__all__ = [
    "COUPLING_TOL",
    "OperatorKind",
    "Verdict",
    "ModelOperator",
    "Classification",
    "OperatorSpecError",
    "SupercriticalCouplingError",
    "UnsupportedKindError",
    "OperatorFamily",
    "operator_family",
    "register_operator_family",
    "get_operator_family",
    "family_for_kind",
    "list_operator_families",
    "make_operator",
    "parse_operator",
    "classify",
    "heat_kernel",
    "has_heat_kernel",
]
