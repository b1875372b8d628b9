"""Tests for the transform engines, sampled functions, data specs and spectral densities."""

from __future__ import annotations

import math
import warnings

import numpy as np
import pytest

from conftest import GRID_M, GRID_R, make_data
from critlab.guards import ResolutionError
from critlab.operators import parse_operator
from critlab.semigroup import heat_norm
from critlab.spectral import (
    MIN_GRID_SIZE,
    DataSpecError,
    GridError,
    GridMismatchError,
    SampledFunction,
    TransformFactory,
    apply_multiplier,
    check_resolved,
    forward,
    inverse,
    parse_data_spec,
    random_profiles,
    sample_data,
    spectral_density,
    transform_at,
)

KINDS = ["free1d", "free:2", "free:3", "free:4", "hardy:3:-0.25", "hardy:3:1"]


def _engine(spec: str, m: int = GRID_M, r: float = GRID_R):
    return TransformFactory.create(parse_operator(spec), m, r)


@pytest.mark.parametrize("spec", KINDS)
def test_plancherel_and_round_trip(spec):
    for f in random_profiles(_engine(spec), 20, seed=3):
        F = forward(f)
        assert F.norm() == pytest.approx(f.norm(), rel=1e-8)
        back = inverse(F)
        assert (back - f).norm() <= 1e-8 * f.norm()


@pytest.mark.parametrize("spec", ["free1d", "free:3"])
def test_gaussian_transform_closed_form(spec):
    op, g = make_data(spec, "gaussian(1)")
    k = np.array([0.0, 0.3, 1.0, 2.5, 5.0])
    # both normalizations map the unit Gaussian to k^{ν_e} e^{-k²/2}
    expected = k ** g.engine.profile_order * np.exp(-0.5 * k * k)
    np.testing.assert_allclose(transform_at(g, k), expected, rtol=1e-8, atol=1e-12)


def test_engines_are_cached_per_grid():
    op = parse_operator("free:3")
    assert TransformFactory.create(op, 256, 30.0) is TransformFactory.create(op, 256, 30.0)
    assert TransformFactory.create(op, 256, 30.0) is not TransformFactory.create(op, 256, 20.0)


def test_grid_validation():
    op = parse_operator("free:3")
    with pytest.raises(GridError):
        TransformFactory.create(op, MIN_GRID_SIZE - 1, 40.0)
    with pytest.raises(GridError):
        TransformFactory.create(op, 64, -1.0)


def test_hankel_grid_is_inside_the_box():
    engine = _engine("hardy:3:1")
    r = engine.physical.radii
    k = engine.spectral.frequencies
    assert np.all(np.diff(r) > 0.0) and 0.0 < r[0] and r[-1] < GRID_R
    assert np.all(np.diff(k) > 0.0) and k[-1] < engine.spectral.band_limit


def test_functions_from_other_grids_do_not_mix():
    f = sample_data(_engine("free:3"), "gaussian(1)")
    g = sample_data(_engine("free:2"), "gaussian(1)")
    with pytest.raises(GridMismatchError):
        f + g
    with pytest.raises(GridMismatchError):
        SampledFunction(_engine("free:3"), np.zeros(3))


def test_heat_multiplier_is_contractive():
    op, g = make_data("free:3", "bump(3,1)")
    evolved = inverse(apply_multiplier(forward(g), lambda k: np.exp(-k * k)))
    assert evolved.norm() < g.norm()
    with pytest.raises(ValueError):
        apply_multiplier(forward(g), lambda k: 1.0 / (k - k))


def test_underresolved_data_trips_the_guard():
    with pytest.raises(ResolutionError) as excinfo:
        sample_data(_engine("free:3", 16, GRID_R), "bump(3,1)")
    assert excinfo.value.needed_m == 32


def test_resolved_data_passes_the_guard():
    _, g = make_data("free:3", "gaussian(1)")
    assert check_resolved(g) < 1e-6


@pytest.mark.parametrize(
    "text", ["gauss(1)", "gaussian(0)", "bump(3)", "bump(0.5,1)", "annulus(3,2)", "dipole(3,4,1)", "bump(a,1)", ""]
)
def test_malformed_data_specs(text):
    with pytest.raises(DataSpecError):
        parse_data_spec(text)


def test_data_spec_text_is_canonical():
    assert parse_data_spec(" Bump( 3 , 1.0 ) ").text == "bump(3,1)"


def test_data_must_fit_inside_the_box():
    with pytest.raises(DataSpecError):
        sample_data(_engine("free:3"), "bump(39.5,1)")


def test_hardy_bump_must_avoid_the_origin():
    with pytest.raises(DataSpecError):
        sample_data(_engine("hardy:3:1"), "bump(0,1)")


def test_random_profiles_are_seeded():
    engine = _engine("free:2")
    first = random_profiles(engine, 3, seed=7)
    second = random_profiles(engine, 3, seed=7)
    other = random_profiles(engine, 3, seed=8)
    for a, b in zip(first, second):
        np.testing.assert_array_equal(a.samples, b.samples)
    assert not np.array_equal(first[0].samples, other[0].samples)


def test_random_profiles_are_signed_and_quiet_at_the_origin():
    engine = _engine("hardy:3:1")
    functions = random_profiles(engine, 50, seed=3)
    assert any(np.any(f.samples < 0.0) for f in functions)
    assert any(np.any(f.samples > 0.0) for f in functions)
    near_origin = engine.physical.radii < 0.5
    for f in functions:
        assert np.max(np.abs(f.samples[near_origin])) <= 1e-4 * np.max(np.abs(f.samples))


@pytest.mark.parametrize("spec, exponent", [("free1d", 0.0), ("free:2", 1.0), ("free:3", 2.0), ("hardy:3:1", 1.0 + 2.0 * math.sqrt(1.25))])
def test_density_small_k_exponent(spec, exponent):
    _, g = make_data(spec, "gaussian(1)" if not spec.startswith("hardy") else "bump(3,1)")
    density = spectral_density(g)
    assert density.exponent == pytest.approx(exponent, abs=1e-4)
    assert density.fit_reliable
    assert not density.non_generic


def test_density_norm_matches_grid_norm(free3_gaussian):
    op, g = free3_gaussian
    assert heat_norm(op, g, 0.0) == pytest.approx(g.norm(), rel=1e-8)


def test_cancelled_moment_is_non_generic():
    _, g = make_data("free1d", "dipole(4,10,2)")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        density = spectral_density.__wrapped__(g)
    assert density.non_generic
    assert any("low-frequency moment" in str(w.message) for w in caught)
