"""Tests for the heat semigroup, range seminorms, α-scans and Green kernels."""

from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import make_data
from critlab.operators import classify, parse_operator
from critlab.semigroup import (
    InconclusiveScanError,
    NotApplicableError,
    SeminormVerdict,
    UnsupportedKindError,
    alpha_grid,
    bracket,
    classify_tail,
    green_kernel_alpha,
    heat_decay_rate,
    heat_evolve,
    heat_norm,
    preimage_norm,
    range_inner,
    riesz_kernel,
    scan_interval,
    seminorm_freq,
    seminorm_time,
)
from critlab.semigroup.results import SeminormResult
from critlab.spectral import SampledFunction
from critlab.wave import GrowthKind, decay_curve


def _gaussian_seminorm_free3(alpha: float) -> float:
    """|||e^{-r²/2}|||_α in R³ from ρ(k) = k² e^{-k²} and ω = 4π."""
    return math.sqrt(2.0 * math.pi * math.gamma(2.0 * alpha) * 2.0 ** (-2.0 * alpha) * math.gamma(1.5 - 2.0 * alpha))


# ===== heat =====

def test_heat_evolve_zero_time_is_identity(free3_bump):
    op, g = free3_bump
    assert heat_evolve(op, g, 0.0) is g
    with pytest.raises(ValueError):
        heat_evolve(op, g, -1.0)


def test_heat_norm_is_decreasing(free3_bump):
    op, g = free3_bump
    norms = heat_norm(op, g, np.logspace(-2, 4, 25))
    assert isinstance(heat_norm(op, g, 1.0), float)
    assert np.all(np.diff(norms) < 0.0)


def test_heat_norm_gaussian_closed_form(free3_gaussian):
    op, g = free3_gaussian
    # ‖e^{-tS}g‖² = 4π ∫ k² e^{-(1+2t)k²} dk = π^{3/2} (1+2t)^{-3/2}
    for t in (0.5, 10.0, 1e3):
        expected = math.pi**0.75 * (1.0 + 2.0 * t) ** -0.75
        assert heat_norm(op, g, t) == pytest.approx(expected, rel=1e-6)


@pytest.mark.parametrize("spec, data", [("free1d", "bump(0,2)"), ("free:3", "bump(3,1)"), ("hardy:3:-0.25", "bump(3,1)")])
def test_heat_decay_rate_matches_interval_endpoint(spec, data):
    op, g = make_data(spec, data)
    rate = heat_decay_rate(op, g, np.logspace(0.0, 4.0, 33))
    assert rate == pytest.approx(classify(op).analytic_sup_alpha, abs=0.03)


def test_heat_decay_rate_needs_two_decades(free3_bump):
    op, g = free3_bump
    with pytest.raises(ValueError):
        heat_decay_rate(op, g, [1.0, 2.0, 5.0])


# ===== seminorms =====

@pytest.mark.parametrize("slope, verdict", [(-0.5, SeminormVerdict.FINITE), (-0.05, SeminormVerdict.INCONCLUSIVE), (0.0, SeminormVerdict.DIVERGENT)])
def test_classify_tail(slope, verdict):
    assert classify_tail(slope) is verdict


@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.4, 0.6])
def test_seminorm_freq_gaussian_closed_form(free3_gaussian, alpha):
    op, g = free3_gaussian
    result = seminorm_freq(op, g, alpha)
    assert result.is_finite
    assert result.value == pytest.approx(_gaussian_seminorm_free3(alpha), rel=1e-6)


@pytest.mark.parametrize("spec, data", [("free:3", "gaussian(1)"), ("free:3", "bump(3,1)"), ("free:2", "bump(3,1)"), ("hardy:3:1", "bump(3,1)")])
def test_time_and_frequency_methods_agree(spec, data):
    op, g = make_data(spec, data)
    sup = classify(op).analytic_sup_alpha
    for alpha in (a for a in (0.1, 0.2, 0.3, 0.4) if a <= sup - 0.1):
        by_time = seminorm_time(op, g, alpha)
        by_freq = seminorm_freq(op, g, alpha)
        assert by_time.is_finite and by_freq.is_finite
        assert by_time.value == pytest.approx(by_freq.value, rel=1e-3)


def test_divergent_beyond_the_interval(free3_bump):
    op, g = free3_bump
    assert seminorm_time(op, g, 0.8).is_divergent
    assert seminorm_freq(op, g, 0.8).is_divergent
    assert seminorm_freq(op, g, 0.8).value is None


@pytest.mark.parametrize("spec", ["free:3", "hardy:3:1"])
def test_verdicts_agree_across_disjoint_bumps(spec):
    _, near = make_data(spec, "bump(3,1)")
    op, far = make_data(spec, "bump(10,2)")
    sup = classify(op).analytic_sup_alpha
    for alpha in (a for a in np.arange(0.1, 1.3, 0.1) if abs(a - sup) > 0.05):
        assert seminorm_freq(op, near, alpha).verdict is seminorm_freq(op, far, alpha).verdict


@pytest.mark.parametrize("method", [seminorm_freq, seminorm_time])
def test_divergence_persists_for_larger_alpha(free3_bump, method):
    op, g = free3_bump
    verdicts = [method(op, g, alpha).verdict for alpha in alpha_grid(0.1, 1.2, 0.1)]
    first = verdicts.index(SeminormVerdict.DIVERGENT)
    assert all(v is SeminormVerdict.DIVERGENT for v in verdicts[first:])
    assert SeminormVerdict.FINITE in verdicts[:first]


@pytest.mark.parametrize("spec", ["free:3", "free:4", "hardy:3:1"])
def test_bounded_wave_norms_give_finite_seminorms(spec):
    op, g = make_data(spec, "bump(3,1)")
    curve = decay_curve(op, g, np.logspace(-1.0, 3.0, 65))
    assert curve.model.kind is GrowthKind.BOUNDED
    for alpha in alpha_grid(0.05, curve.bounded_exponent() - 0.05, 0.05):
        assert seminorm_freq(op, g, alpha).is_finite


def test_time_method_is_inconclusive_near_the_endpoint(free3_bump):
    op, g = free3_bump
    result = seminorm_time(op, g, 0.72)
    assert result.verdict is SeminormVerdict.INCONCLUSIVE
    assert result.tail_slope == pytest.approx(-0.06, abs=0.01)


def test_zero_data_has_zero_seminorm(free3_bump):
    op, g = free3_bump
    zero = SampledFunction.zeros(g.engine)
    assert seminorm_freq(op, zero, 0.4).value == 0.0
    assert seminorm_time(op, zero, 0.4).value == 0.0


@pytest.mark.parametrize("alpha", [0.0, -0.3, math.nan])
def test_seminorm_rejects_bad_alpha(free3_bump, alpha):
    op, g = free3_bump
    with pytest.raises(ValueError):
        seminorm_freq(op, g, alpha)


def test_seminorm_result_value_matches_verdict():
    with pytest.raises(ValueError):
        SeminormResult(alpha=0.3, verdict=SeminormVerdict.DIVERGENT, value=1.0)
    with pytest.raises(ValueError):
        SeminormResult(alpha=0.3, verdict=SeminormVerdict.FINITE)


def test_range_inner_polarizes_the_seminorm(free3_bump, free3_gaussian):
    op, g = free3_bump
    value = seminorm_freq(op, g, 0.3).value
    assert range_inner(op, g, g, 0.3) == pytest.approx(value * value, rel=1e-10)
    with pytest.raises(NotApplicableError):
        range_inner(op, g, g, 0.8)


def test_preimage_norm_relation(free3_bump):
    op, g = free3_bump
    alpha = 0.3
    expected = 2.0**alpha / math.sqrt(math.gamma(2.0 * alpha)) * seminorm_freq(op, g, alpha).value
    assert preimage_norm(op, g, alpha) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(NotApplicableError):
        preimage_norm(op, g, 0.8)


# ===== scans =====

def test_alpha_grid_is_rounded():
    grid = alpha_grid(0.02, 0.1, 0.02)
    assert grid == [0.02, 0.04, 0.06, 0.08, 0.1]
    with pytest.raises(ValueError):
        alpha_grid(0.5, 0.1, 0.02)


def test_bracket_from_verdicts():
    finite = SeminormResult(alpha=0.1, verdict=SeminormVerdict.FINITE, value=1.0)
    divergent = SeminormResult(alpha=0.1, verdict=SeminormVerdict.DIVERGENT)
    inconclusive = SeminormResult(alpha=0.1, verdict=SeminormVerdict.INCONCLUSIVE)
    assert bracket([0.1, 0.2, 0.3], [finite, inconclusive, divergent]) == (0.1, 0.3)
    assert bracket([0.1, 0.2], [divergent, divergent]) == (0.0, 0.1)
    assert bracket([0.1, 0.2], [finite, finite]) == (0.2, math.inf)


@pytest.mark.parametrize(
    "spec, data",
    [
        ("free1d", "bump(0,2)"),
        ("free:3", "bump(3,1)"),
        ("free:4", "bump(3,1)"),
        ("hardy:2:0", "bump(3,1)"),
        ("hardy:3:-0.25", "bump(3,1)"),
        ("hardy:3:1", "bump(3,1)"),
    ],
)
def test_scan_brackets_the_endpoint(spec, data):
    op, g = make_data(spec, data)
    sup = classify(op).analytic_sup_alpha
    estimate = scan_interval(op, g, 0.02, sup + 0.2, 0.02)
    assert estimate.contains(sup, slack=0.03)
    assert estimate.width <= 0.04 + 1e-9
    assert len(estimate.verdicts) == len(estimate.alpha_grid)


def test_scan_rejects_zero_and_signed_data(free3_bump):
    op, g = free3_bump
    with pytest.raises(ValueError):
        scan_interval(op, SampledFunction.zeros(g.engine), 0.02, 1.0, 0.02)
    with pytest.raises(ValueError):
        scan_interval(op, g * -1.0, 0.02, 1.0, 0.02)


def test_inconclusive_scan_error_carries_the_grid():
    error = InconclusiveScanError("all inconclusive", [0.1, 0.2])
    assert error.alpha_grid == [0.1, 0.2]


# ===== green kernels =====

def test_newtonian_kernel_in_three_dimensions():
    result = green_kernel_alpha(parse_operator("free:3"), [0.0, 0.0, 0.0], [0.0, 0.0, 1.0], 0.5)
    assert result.verdict is SeminormVerdict.FINITE
    assert result.value == pytest.approx(1.0 / (4.0 * math.pi), rel=1e-4)


@pytest.mark.parametrize("spec, alpha, d", [("free:3", 0.3, 1.0), ("free:3", 0.6, 2.5), ("free1d", 0.1, 0.7), ("free:4", 0.75, 1.0)])
def test_green_kernel_matches_riesz_closed_form(spec, alpha, d):
    op = parse_operator(spec)
    result = green_kernel_alpha(op, 0.0, d, alpha)
    assert result.value == pytest.approx(riesz_kernel(op.N, alpha, d), rel=1e-4)
    assert result.rel_error < 1e-4


def test_green_kernel_divergent_in_the_plane():
    result = green_kernel_alpha(parse_operator("free:2"), 0.0, 1.0, 0.5)
    assert result.verdict is SeminormVerdict.DIVERGENT
    assert result.value is None


def test_green_kernel_needs_a_closed_form_heat_kernel():
    with pytest.raises(UnsupportedKindError):
        green_kernel_alpha(parse_operator("hardy:3:1"), 0.0, 1.0, 0.5)


def test_green_kernel_needs_distinct_points():
    with pytest.raises(ValueError):
        green_kernel_alpha(parse_operator("free:3"), 1.0, 1.0, 0.5)
