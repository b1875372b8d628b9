"""Tests for operator parsing, validation and the analytic classification."""

from __future__ import annotations

import math

import numpy as np
import pytest

from critlab.operators import (
    OperatorKind,
    OperatorSpecError,
    SupercriticalCouplingError,
    UnsupportedKindError,
    Verdict,
    classify,
    has_heat_kernel,
    heat_kernel,
    list_operator_families,
    make_operator,
    parse_operator,
)


@pytest.mark.parametrize(
    "spec, kind, N, nu",
    [
        ("free1d", OperatorKind.FREE_LINE, 1, -0.5),
        ("free:2", OperatorKind.FREE_RADIAL, 2, 0.0),
        ("free:3", OperatorKind.FREE_RADIAL, 3, 0.5),
        ("hardy:3:-0.25", OperatorKind.HARDY_RADIAL, 3, 0.0),
        ("hardy:3:1", OperatorKind.HARDY_RADIAL, 3, math.sqrt(1.25)),
        ("HARDY:4:-1", OperatorKind.HARDY_RADIAL, 4, 0.0),
    ],
)
def test_parse_operator(spec, kind, N, nu):
    op = parse_operator(spec)
    assert op.kind is kind
    assert op.N == N
    assert op.nu == pytest.approx(nu, abs=1e-15)


def test_spec_round_trip():
    for spec in ("free1d", "free:5", "hardy:3:-0.25", "hardy:3:0", "hardy:2:0"):
        assert parse_operator(spec).spec == spec


def test_critical_coupling_snaps_to_lambda_star():
    op = parse_operator("hardy:3:-1/4")
    assert op.coupling == op.lambda_star == -0.25
    assert op.nu == 0.0


@pytest.mark.parametrize("spec", ["hardy:2:0", "hardy:2:-0", "hardy:2:-1e-13"])
def test_planar_critical_coupling_is_unsigned_zero(spec):
    op = parse_operator(spec)
    assert op.spec == "hardy:2:0"
    assert math.copysign(1.0, op.coupling) == 1.0
    assert make_operator(OperatorKind.HARDY_RADIAL, 2, -0.0).spec == "hardy:2:0"


@pytest.mark.parametrize("spec", ["", "free", "free:1", "free:x", "free1d:2", "hardy:3", "heat:3", "hardy:3:abc"])
def test_parse_operator_rejects_malformed(spec):
    with pytest.raises(OperatorSpecError):
        parse_operator(spec)


def test_supercritical_coupling_is_rejected():
    with pytest.raises(SupercriticalCouplingError) as excinfo:
        parse_operator("hardy:3:-0.3")
    assert excinfo.value.critical_coupling == pytest.approx(-0.25)
    assert excinfo.value.spec == "hardy:3:-0.3"


def test_make_operator_rejects_coupling_on_free_kind():
    with pytest.raises(OperatorSpecError):
        make_operator(OperatorKind.FREE_RADIAL, 3, 1.0)


@pytest.mark.parametrize(
    "spec, sup, verdict",
    [
        ("free1d", 0.25, Verdict.CRITICAL),
        ("free:2", 0.5, Verdict.CRITICAL),
        ("free:3", 0.75, Verdict.SUBCRITICAL),
        ("free:4", 1.0, Verdict.SUBCRITICAL),
        ("hardy:3:-0.25", 0.5, Verdict.CRITICAL),
        ("hardy:2:0", 0.5, Verdict.CRITICAL),
        ("hardy:3:1", 0.5 * (math.sqrt(1.25) + 1.0), Verdict.SUBCRITICAL),
    ],
)
def test_classify(spec, sup, verdict):
    result = classify(parse_operator(spec))
    assert result.analytic_sup_alpha == pytest.approx(sup, rel=1e-14)
    assert result.verdict is verdict
    assert not result.endpoint_included


def test_free_heat_kernel_closed_form():
    op = parse_operator("free:3")
    t = np.array([0.5, 1.0, 4.0])
    expected = (4.0 * math.pi * t) ** -1.5 * np.exp(-1.0 / (4.0 * t))
    np.testing.assert_allclose(heat_kernel(op, 1.0, t), expected, rtol=1e-14)


def test_hardy_has_no_closed_form_heat_kernel():
    op = parse_operator("hardy:3:1")
    assert not has_heat_kernel(op)
    with pytest.raises(UnsupportedKindError):
        heat_kernel(op, 1.0, 1.0)


def test_family_listing():
    prefixes = [prefix for prefix, _, _ in list_operator_families()]
    assert prefixes == ["free1d", "free", "hardy"]
