"""Shared fixtures: default grids and data used across the test modules."""

from __future__ import annotations

import pytest

from critlab.operators import parse_operator
from critlab.spectral import TransformFactory, sample_data

GRID_M = 512
GRID_R = 40.0


def make_data(spec: str, data: str, m: int = GRID_M, r: float = GRID_R):
    """Operator and sampled data on a (cached) grid."""
    op = parse_operator(spec)
    engine = TransformFactory.create(op, m, r)
    return op, sample_data(engine, data)


@pytest.fixture(scope="module")
def free3_bump():
    return make_data("free:3", "bump(3,1)")


@pytest.fixture(scope="module")
def free3_gaussian():
    return make_data("free:3", "gaussian(1)")


@pytest.fixture(scope="module")
def line_bump():
    return make_data("free1d", "bump(0,2)")


@pytest.fixture(scope="module")
def critical_bump():
    return make_data("hardy:3:-0.25", "bump(2.5,1)")
