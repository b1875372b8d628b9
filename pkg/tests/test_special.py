"""Tests for Bessel functions, their zeros and the wave multiplier."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.special import jn_zeros, jv

from critlab.special import (
    BesselDomainError,
    SERIES_LIMIT,
    bessel_j,
    bessel_j_scaled,
    bessel_zeros,
    crossover_point,
    sphere_area,
    wave_multiplier,
)
from critlab.special.bessel import _extended_scalar


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 1.118, 2.5, 7.0, 20.0])
def test_bessel_j_matches_reference(nu):
    x = np.concatenate([np.linspace(0.0, 12.0, 97), np.linspace(12.5, 400.0, 61)])
    expected = jv(nu, x)
    got = bessel_j(nu, x)
    assert got.shape == x.shape
    np.testing.assert_allclose(got, expected, rtol=0.0, atol=1e-10)


def test_bessel_j_scalar_returns_float():
    value = bessel_j(0.0, 1.0)
    assert isinstance(value, float)
    assert value == pytest.approx(0.7651976865579666, abs=1e-14)


def test_bessel_j_half_order_closed_form():
    x = np.linspace(0.1, 50.0, 200)
    np.testing.assert_allclose(bessel_j(0.5, x), np.sqrt(2.0 / (math.pi * x)) * np.sin(x), atol=1e-10)


def test_bessel_j_scaled_limit_at_origin():
    nu = 1.5
    assert bessel_j_scaled(nu, 0.0) == pytest.approx(1.0 / (2.0**nu * math.gamma(nu + 1.0)), rel=1e-14)


@pytest.mark.parametrize("nu", [-0.1, 50.5, math.nan])
def test_bessel_j_rejects_bad_order(nu):
    with pytest.raises(BesselDomainError):
        bessel_j(nu, 1.0)


@pytest.mark.parametrize("x", [-1.0, math.inf, math.nan])
def test_bessel_j_rejects_bad_argument(x):
    with pytest.raises(BesselDomainError):
        bessel_j(0.0, x)


@pytest.mark.parametrize("nu", [0, 1, 3])
def test_bessel_zeros_match_reference(nu):
    zeros = bessel_zeros(nu, 40)
    np.testing.assert_allclose(zeros, jn_zeros(nu, 40), rtol=1e-12)
    assert np.all(np.diff(zeros) > 0.0)


def test_bessel_zeros_first_zero_of_order_zero():
    assert bessel_zeros(0.0, 1)[0] == pytest.approx(2.404825557695773, abs=1e-12)


def test_bessel_zeros_empty():
    assert bessel_zeros(1.0, 0).size == 0


def test_wave_multiplier_small_and_zero_frequency():
    assert wave_multiplier(2.0, 0.0) == 2.0
    k = np.array([0.0, 1e-8, 1e-3, 1.0])
    expected = np.where(k == 0.0, 2.0, np.sin(2.0 * k) / np.where(k == 0.0, 1.0, k))
    np.testing.assert_allclose(wave_multiplier(2.0, k), expected, rtol=1e-14)


@pytest.mark.parametrize("n, expected", [(0, 2.0), (1, 2.0 * math.pi), (2, 4.0 * math.pi)])
def test_sphere_area(n, expected):
    assert sphere_area(n) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("nu", np.linspace(0.0, 3.0, 7))
def test_consecutive_order_zeros_interlace(nu):
    inner = bessel_zeros(nu, 30)
    outer = bessel_zeros(nu + 1.0, 30)
    assert np.all(inner < outer)
    assert np.all(outer[:-1] < inner[1:])


def test_half_order_zeros_are_multiples_of_pi():
    np.testing.assert_allclose(bessel_zeros(0.5, 3), [math.pi, 2.0 * math.pi, 3.0 * math.pi], rtol=1e-12)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 1.7])
def test_series_and_asymptotic_agree_at_the_crossover(nu):
    cross = crossover_point(nu)
    below, above = bessel_j(nu, np.array([cross - 1e-9, cross + 1e-9]))
    assert abs(below - above) < 1e-10
    assert below == pytest.approx(jv(nu, cross - 1e-9), abs=1e-10)
    assert above == pytest.approx(jv(nu, cross + 1e-9), abs=1e-10)


def test_extended_band_agrees_at_its_seams():
    nu = 7.0
    x = np.array([SERIES_LIMIT - 1e-9, SERIES_LIMIT + 1e-9, crossover_point(nu) - 1e-9, crossover_point(nu) + 1e-9])
    np.testing.assert_allclose(bessel_j(nu, x), jv(nu, x), rtol=0.0, atol=1e-10)


def test_extended_band_reuses_evaluations():
    x = np.array([30.0, 40.0, 30.0])
    first = bessel_j(10.0, x)
    hits = _extended_scalar.cache_info().hits
    second = bessel_j(10.0, x)
    assert first[0] == first[2]
    np.testing.assert_array_equal(first, second)
    assert _extended_scalar.cache_info().hits >= hits + 2


@pytest.mark.parametrize("t", [1.0, 3.0])
def test_wave_multiplier_is_continuous_at_the_series_switch(t):
    x = np.array([1e-4 - 1e-8, 1e-4 + 1e-8])
    k = x / t
    below, above = wave_multiplier(t, k)
    assert abs(below - above) < 1e-11 * t
    for value, xi in zip((below, above), x):
        assert value == pytest.approx(t * math.sin(xi) / xi, rel=1e-14)
