"""Reduction of the critical Hardy operator in R^N to the free Laplacian in R².

With ν = 0 both operators are diagonalized by the order-0 Hankel transform
of r^{(N-2)/2} g, so the map g ↦ g_* = r^{(N-2)/2} g intertwines their flows.
"""

from __future__ import annotations

import numpy as np

from ..operators import ModelOperator, OperatorKind, OperatorSpecError, make_operator
from ..spectral import SampledFunction, TransformFactory, require_operator


def reduce_to_2d(N: int, g: SampledFunction) -> SampledFunction:
    """g_*(r) = r^{(N-2)/2} g(r) as data for ``free:2`` on the same (M, R) grid.

    Raises:
        OperatorSpecError: If ``g`` does not belong to hardy:N:λ*.
    """
    op = g.op
    if op.kind is not OperatorKind.HARDY_RADIAL or op.N != N:
        raise OperatorSpecError(f"reduce_to_2d needs data for hardy:{N}:λ*, got {op.spec}", op.spec)
    if op.coupling != op.lambda_star:
        raise OperatorSpecError(
            f"reduce_to_2d needs the critical coupling λ* = {op.lambda_star:g}, got λ = {op.coupling:g}",
            op.spec,
        )
    plane = TransformFactory.create(make_operator(OperatorKind.FREE_RADIAL, 2), g.engine.size, g.engine.cutoff)
    # the reduced sample of g_* on R² is h itself
    return SampledFunction(plane, g.samples)


def restore_from_2d(op: ModelOperator, f: SampledFunction) -> SampledFunction:
    """Inverse of :func:`reduce_to_2d`: free:2 data back to hardy:N:λ*."""
    if f.op.kind is not OperatorKind.FREE_RADIAL or f.op.N != 2:
        raise OperatorSpecError(f"restore_from_2d needs free:2 data, got {f.op.spec}", f.op.spec)
    if op.kind is not OperatorKind.HARDY_RADIAL or op.coupling != op.lambda_star:
        raise OperatorSpecError(f"restore_from_2d needs a critical Hardy operator, got {op.spec}", op.spec)
    engine = TransformFactory.create(op, f.engine.size, f.engine.cutoff)
    return SampledFunction(engine, f.samples)


def moment(op: ModelOperator, g: SampledFunction) -> float:
    """ω_{N-1} ∫ g(r) r^{-(N-2)/2} r^{N-1} dr, i.e. ∫ g(x)|x|^{-(N-2)/2} dx by grid quadrature.

    On the line this is ∫ g dx.
    """
    require_operator(g, op)
    return float(op.sphere_measure * np.sum(g.engine.radial_measure * g.samples))


__all__ = ["reduce_to_2d", "restore_from_2d", "moment"]
