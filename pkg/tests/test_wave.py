"""Tests for wave propagation, growth laws and the heat/wave/range identities."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.special import erf

from conftest import make_data
from critlab.operators import OperatorSpecError
from critlab.semigroup import NotApplicableError, heat_norm
from critlab.spectral import SampledFunction
from critlab.wave import (
    DecayCurve,
    DegenerateFitError,
    GrowthKind,
    GrowthModel,
    best_model,
    decay_curve,
    dissipation_check,
    energy,
    fit_growth_models,
    heat_bound_from_wave,
    interpolation_check,
    moment,
    reduce_to_2d,
    restore_from_2d,
    transmutation_check,
    wave_evolve,
    wave_norm,
)

TIMES = np.logspace(-1.0, 3.0, 65)


# ===== propagation =====

@pytest.mark.parametrize("t", [0.0, 1.0, 10.0, 1e4])
def test_energy_is_conserved(free3_bump, t):
    op, g = free3_bump
    assert energy(wave_evolve(op, g, t)) == pytest.approx(g.norm_squared(), rel=1e-10)


def test_wave_evolve_rejects_negative_time(free3_bump):
    op, g = free3_bump
    with pytest.raises(ValueError):
        wave_evolve(op, g, -0.5)
    with pytest.raises(ValueError):
        wave_norm(op, g, -0.5)


def test_wave_norm_vanishes_at_time_zero(free3_bump):
    op, g = free3_bump
    assert wave_norm(op, g, 0.0) == 0.0
    assert wave_norm(op, SampledFunction.zeros(g.engine), 3.0) == 0.0


@pytest.mark.parametrize("t", [0.5, 2.0, 10.0, 100.0])
def test_wave_norm_gaussian_in_three_dimensions(free3_gaussian, t):
    op, g = free3_gaussian
    # ‖W(t)g‖² = 4π ∫ sin²(tk) e^{-k²} dk = π^{3/2}(1 - e^{-t²})
    expected = math.sqrt(math.pi**1.5 * (1.0 - math.exp(-t * t)))
    assert wave_norm(op, g, t) == pytest.approx(expected, rel=1e-5)


@pytest.mark.parametrize("t", [0.5, 3.0, 50.0])
def test_wave_norm_gaussian_on_the_line(t):
    op, g = make_data("free1d", "gaussian(1)")
    # ∫ sin²(tk)/k² e^{-k²} dk relative to ∫ e^{-k²} dk
    expected = math.sqrt(math.sqrt(math.pi) * (t * erf(t) + (math.exp(-t * t) - 1.0) / math.sqrt(math.pi)))
    assert wave_norm(op, g, t) / heat_norm(op, g, 0.0) == pytest.approx(expected, rel=1e-5)


# ===== growth laws =====

def test_subcritical_radial_norms_are_bounded(free3_bump):
    op, g = free3_bump
    curve = decay_curve(op, g, TIMES)
    assert curve.model.kind is GrowthKind.BOUNDED
    assert curve.bounded_exponent() == 0.5


@pytest.mark.parametrize("spec", ["hardy:3:0.5", "hardy:3:1"])
def test_hardy_coupling_keeps_norms_bounded(spec):
    op, g = make_data(spec, "bump(3,1)")
    curve = decay_curve(op, g, TIMES)
    assert curve.model.kind is GrowthKind.BOUNDED
    assert np.all(np.isfinite(curve.norms))
    assert curve.norms[-1] <= 2.0 * curve.norms[len(TIMES) // 2]


def test_line_norms_grow_like_square_root(line_bump):
    op, g = line_bump
    curve = decay_curve(op, g, TIMES)
    assert curve.model.kind is GrowthKind.POWER
    assert curve.model.parameter == pytest.approx(0.5, abs=0.02)
    assert curve.bounded_exponent() == pytest.approx(0.25, abs=0.01)


def test_line_dipole_stays_bounded():
    op, g = make_data("free1d", "dipole(4,10,2)")
    assert decay_curve(op, g, TIMES).model.kind is GrowthKind.BOUNDED


def test_planar_norms_grow_logarithmically():
    op, g = make_data("free:2", "bump(3,1)")
    curve = decay_curve(op, g, TIMES)
    assert curve.model.kind is GrowthKind.SQRT_LOG
    assert set(curve.residuals) == {"Bounded", "SqrtLog", "Power"}


def test_decay_curve_reports_the_seminorm_bound(free3_bump):
    op, g = free3_bump
    curve = decay_curve(op, g, TIMES, alpha=0.4, max_workers=4)
    assert curve.bound is not None
    assert curve.bound_holds


def test_decay_curve_needs_two_decades(free3_bump):
    op, g = free3_bump
    with pytest.raises(ValueError):
        decay_curve(op, g, np.linspace(1.0, 50.0, 20))


def test_fit_needs_enough_points():
    with pytest.raises(DegenerateFitError) as excinfo:
        fit_growth_models(np.logspace(-2, 2, 9), np.ones(9))
    assert excinfo.value.points < 8


def test_fit_recognizes_an_exact_power_law():
    t = np.logspace(0, 3, 49)
    model = best_model(fit_growth_models(t, 2.0 * t**0.3))
    assert model.kind is GrowthKind.POWER
    assert model.parameter == pytest.approx(0.3, abs=1e-10)
    assert model.residual < 1e-12


def test_best_model_prefers_earlier_candidates_on_ties():
    first = GrowthModel(kind=GrowthKind.BOUNDED, parameter=1.0, residual=0.1)
    second = GrowthModel(kind=GrowthKind.POWER, parameter=0.5, residual=0.1)
    assert best_model([first, second]) is first


def test_decay_curve_validation():
    model = GrowthModel(kind=GrowthKind.BOUNDED, parameter=1.0, residual=0.0)
    with pytest.raises(ValueError):
        DecayCurve(times=[1.0, 1.0], norms=[1.0, 1.0], model=model)
    with pytest.raises(ValueError):
        DecayCurve(times=[1.0, 2.0], norms=[1.0, -1.0], model=model)
    with pytest.raises(ValueError):
        DecayCurve(times=[1.0, 2.0], norms=[1.0], model=model)


# ===== identities =====

@pytest.mark.parametrize("spec, data", [("free1d", "gaussian(1)"), ("free:3", "bump(3,1)"), ("hardy:3:1", "bump(3,1)")])
@pytest.mark.parametrize("t", [0.5, 2.0])
def test_transmutation_recovers_the_heat_flow(spec, data, t):
    op, g = make_data(spec, data)
    assert transmutation_check(op, g, t) < 1e-4


def test_transmutation_edge_cases(free3_bump):
    op, g = free3_bump
    assert transmutation_check(op, SampledFunction.zeros(g.engine), 1.0) == 0.0
    with pytest.raises(ValueError):
        transmutation_check(op, g, 0.0)
    with pytest.raises(ValueError):
        transmutation_check(op, g, 1.0, points_per_decade=4)


def test_transmutation_is_stable_under_sigma_refinement(free3_bump):
    op, g = free3_bump
    coarse = transmutation_check(op, g, 2.0, points_per_decade=16)
    fine = transmutation_check(op, g, 2.0, sigma_max=40.0, points_per_decade=64)
    assert coarse < 1e-4 and fine < 1e-4


@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.4])
def test_interpolation_inequality(free3_bump, alpha):
    op, g = free3_bump
    result = interpolation_check(op, g, alpha)
    assert result.satisfied
    assert 0.0 < result.ratio <= 1.0 + 1e-6


def test_interpolation_is_an_equality_at_one_half(free3_bump):
    op, g = free3_bump
    assert interpolation_check(op, g, 0.5).ratio == pytest.approx(1.0, abs=1e-6)


def test_interpolation_outside_the_range(line_bump, free3_bump):
    op, g = line_bump
    with pytest.raises(NotApplicableError):
        interpolation_check(op, g, 0.4)
    op, g = free3_bump
    with pytest.raises(ValueError):
        interpolation_check(op, g, 0.6)


def test_heat_bound_from_wave_holds(free3_bump):
    op, g = free3_bump
    curve = decay_curve(op, g, TIMES)
    check = heat_bound_from_wave(op, g, curve)
    assert check.alpha_star == 0.5
    assert check.holds
    assert check.worst_ratio <= 1.0


def test_heat_bound_from_line_growth(line_bump):
    op, g = line_bump
    curve = decay_curve(op, g, TIMES)
    check = heat_bound_from_wave(op, g, curve, alpha_star=0.25, t_grid=np.logspace(0, 3, 13))
    assert check.holds
    with pytest.raises(ValueError):
        heat_bound_from_wave(op, g, curve, alpha_star=0.7)


@pytest.mark.parametrize("t", [0.1, 1.0, 100.0])
def test_dissipation_identity(free3_bump, t):
    op, g = free3_bump
    assert dissipation_check(op, g, t) < 1e-8


# ===== reduction =====

def test_reduction_to_the_plane(critical_bump):
    op, g = critical_bump
    plane = reduce_to_2d(3, g)
    assert plane.op.spec == "free:2"
    np.testing.assert_array_equal(plane.samples, g.samples)
    restored = restore_from_2d(op, plane)
    assert restored.op == op
    np.testing.assert_array_equal(restored.samples, g.samples)


@pytest.mark.parametrize("t", [1.0, 100.0, 1000.0])
def test_reduction_intertwines_wave_norms(critical_bump, t):
    op, g = critical_bump
    plane = reduce_to_2d(3, g)
    ratio = op.sphere_measure / plane.op.sphere_measure
    n = wave_norm(op, g, t)
    n_plane = wave_norm(plane.op, plane, t)
    assert n * n / (n_plane * n_plane) == pytest.approx(ratio, rel=1e-10)


def test_reduction_needs_the_critical_coupling(free3_bump):
    _, g = free3_bump
    with pytest.raises(OperatorSpecError):
        reduce_to_2d(3, g)
    _, h = make_data("hardy:3:1", "bump(3,1)")
    with pytest.raises(OperatorSpecError):
        reduce_to_2d(3, h)
    with pytest.raises(OperatorSpecError):
        restore_from_2d(h.op, reduce_to_2d(3, make_data("hardy:3:-0.25", "bump(3,1)")[1]))


def test_moment_on_the_line():
    op, g = make_data("free1d", "gaussian(1)")
    assert moment(op, g) == pytest.approx(math.sqrt(2.0 * math.pi), rel=1e-6)
