"""Tests for the CSV readers and writers."""

from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import make_data
from critlab.io import (
    DataLoadError,
    format_value,
    load_sampled_function,
    load_spectral_function,
    write_csv,
    write_manifest,
    write_sampled_function,
    write_spectral_function,
)
from critlab.semigroup import SeminormVerdict
from critlab.spectral import forward


@pytest.mark.parametrize(
    "value, text",
    [
        (None, ""),
        (True, "true"),
        (np.bool_(False), "false"),
        (0.1, "0.10000000000000001"),
        (np.float64(2.5), "2.5"),
        (math.nan, "nan"),
        (-math.inf, "-inf"),
        (np.int64(7), "7"),
        (SeminormVerdict.DIVERGENT, "Divergent"),
        ("free:3", "free:3"),
    ],
)
def test_format_value(value, text):
    assert format_value(value) == text


def test_write_csv_checks_row_width(tmp_path):
    path = write_csv(tmp_path / "sub" / "table.csv", ["a", "b"], [[1, 2.0]])
    assert path.read_text(encoding="utf-8") == "a,b\n1,2\n"
    with pytest.raises(ValueError):
        write_csv(tmp_path / "bad.csv", ["a", "b"], [[1]])


def test_write_manifest_is_sorted(tmp_path):
    path = write_manifest(tmp_path / "manifest.txt", {"seed": 0, "alphas": [0.1, 0.2], "operator": "free:3"})
    assert path.read_text(encoding="utf-8").splitlines() == [
        "alphas = 0.10000000000000001,0.20000000000000001",
        "operator = free:3",
        "seed = 0",
    ]


def test_sampled_function_survives_a_csv_trip(tmp_path, free3_bump):
    _, g = free3_bump
    path = write_sampled_function(tmp_path / "g.csv", g)
    assert path.read_text(encoding="utf-8").startswith("r,value\n")
    loaded = load_sampled_function(path, g.engine)
    np.testing.assert_allclose(loaded.samples, g.samples, rtol=1e-14, atol=1e-300)


def test_spectral_function_keeps_imaginary_parts(tmp_path, free3_bump):
    _, g = free3_bump
    F = forward(g * 1j)
    path = write_spectral_function(tmp_path / "F.csv", F)
    assert path.read_text(encoding="utf-8").startswith("k,value,imag\n")
    np.testing.assert_array_equal(load_spectral_function(path, g.engine).samples, F.samples)


def test_missing_file(tmp_path, free3_bump):
    _, g = free3_bump
    with pytest.raises(DataLoadError) as excinfo:
        load_sampled_function(tmp_path / "absent.csv", g.engine)
    assert excinfo.value.path == tmp_path / "absent.csv"


def test_wrong_suffix(tmp_path, free3_bump):
    _, g = free3_bump
    path = tmp_path / "g.json"
    path.write_text("{}", encoding="utf-8")
    with pytest.raises(DataLoadError, match="Unknown file format"):
        load_sampled_function(path, g.engine)


def test_wrong_header(tmp_path, free3_bump):
    _, g = free3_bump
    path = tmp_path / "g.csv"
    path.write_text("x,y\n1,2\n", encoding="utf-8")
    with pytest.raises(DataLoadError) as excinfo:
        load_sampled_function(path, g.engine)
    assert excinfo.value.line_number == 1


def test_bad_number_reports_the_line(tmp_path, free3_bump):
    _, g = free3_bump
    path = tmp_path / "g.csv"
    path.write_text("r,value\n0.1,1.0\n0.2,oops\n", encoding="utf-8")
    with pytest.raises(DataLoadError) as excinfo:
        load_sampled_function(path, g.engine)
    assert excinfo.value.line_number == 3


def test_grid_mismatch(tmp_path, free3_bump):
    _, g = free3_bump
    path = write_sampled_function(tmp_path / "g.csv", g)
    _, other = make_data("free:3", "gaussian(1)", m=256)
    with pytest.raises(DataLoadError, match="rows"):
        load_sampled_function(path, other.engine)
    _, shifted = make_data("free:3", "gaussian(1)", r=41.0)
    with pytest.raises(DataLoadError, match="does not match") as excinfo:
        load_sampled_function(path, shifted.engine)
    assert excinfo.value.line_number == 2
