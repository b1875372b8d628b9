"""Concrete operator families: the free line, free radial and Hardy radial kinds."""

from __future__ import annotations

from fractions import Fraction

from .base import EuclideanFamily, OperatorFamily, OperatorSpecError
from .models import ModelOperator, OperatorKind
from .registry import operator_family


def _parse_dimension(text: str, spec: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise OperatorSpecError(f"dimension must be an integer, got '{text}'", spec) from None
    return n


def _parse_real(text: str, spec: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise OperatorSpecError(f"coupling must be a real number, got '{text}'", spec) from None


@operator_family("free1d")
class FreeLineFamily(EuclideanFamily):
    kind = OperatorKind.FREE_LINE
    grammar = "free1d"
    transform = "cosine"
    description = "-d²/dx² on the line, even sector"

    @classmethod
    def parse(cls, args: list[str], spec: str) -> ModelOperator:
        if args:
            raise OperatorSpecError("free1d takes no arguments", spec)
        from .factory import make_operator
        return make_operator(cls.kind, 1, 0.0)


@operator_family("free")
class FreeRadialFamily(EuclideanFamily):
    kind = OperatorKind.FREE_RADIAL
    grammar = "free:N"
    transform = "hankel"
    description = "-Δ on R^N (N >= 2), radial sector"

    @classmethod
    def parse(cls, args: list[str], spec: str) -> ModelOperator:
        if len(args) != 1:
            raise OperatorSpecError("expected free:N", spec)
        from .factory import make_operator
        return make_operator(cls.kind, _parse_dimension(args[0], spec), 0.0)


@operator_family("hardy")
class HardyRadialFamily(OperatorFamily):
    kind = OperatorKind.HARDY_RADIAL
    grammar = "hardy:N:lambda"
    transform = "hankel"
    description = "-Δ + λ/|x|² on R^N (N >= 2, λ >= -((N-2)/2)²), radial sector"

    @classmethod
    def parse(cls, args: list[str], spec: str) -> ModelOperator:
        if len(args) != 2:
            raise OperatorSpecError("expected hardy:N:lambda", spec)
        from .factory import make_operator
        return make_operator(
            cls.kind, _parse_dimension(args[0], spec), _parse_real(args[1], spec)
        )


__all__ = ["FreeLineFamily", "FreeRadialFamily", "HardyRadialFamily"]
