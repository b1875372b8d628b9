"""CSV loaders for sampled data.

Physical samples use the header ``r,value`` and spectral samples ``k,value``;
an optional ``imag`` column carries imaginary parts. Abscissae must match the
grid of the target engine.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from ...spectral import SampledFunction, SpectralFunction, TransformEngine

GRID_TOL = 1e-10


class DataLoadError(Exception):
    """Raised when data loading fails."""
    def __init__(self, message: str, path: Path, line_number: int | None = None):
        super().__init__(message)
        self.path = path
        self.line_number = line_number


def _load_columns(path: Path, abscissa: str) -> tuple[NDArray[np.float64], NDArray]:
    if not path.exists():
        raise DataLoadError(f"File not found: {path}", path)
    if path.suffix.lower() != ".csv":
        raise DataLoadError(f"Unknown file format: {path.suffix}. Supported: .csv", path)

    xs: list[float] = []
    values: list[complex] = []
    with open(path, "r", encoding="utf-8-sig", newline="") as f:
        reader = csv.DictReader(f)
        fields = reader.fieldnames or []
        if abscissa not in fields or "value" not in fields:
            raise DataLoadError(f"Expected header '{abscissa},value', got {','.join(fields)}", path, 1)
        has_imag = "imag" in fields
        for line_num, row in enumerate(reader, 2):
            try:
                xs.append(float(row[abscissa]))
                re = float(row["value"])
                im = float(row["imag"]) if has_imag and row["imag"] else 0.0
            except (TypeError, ValueError) as e:
                raise DataLoadError(f"Invalid number on line {line_num}: {e}", path, line_number=line_num) from e
            values.append(complex(re, im))

    out = np.array(values)
    if not np.any(out.imag):
        out = out.real.copy()
    return np.array(xs, dtype=float), out


def _check_abscissae(path: Path, found: NDArray[np.float64], expected: NDArray[np.float64], name: str) -> None:
    if found.shape != expected.shape:
        raise DataLoadError(f"Expected {expected.size} rows, got {found.size}", path)
    mismatch = np.abs(found - expected) > GRID_TOL * np.maximum(np.abs(expected), 1.0)
    if np.any(mismatch):
        row = int(np.argmax(mismatch))
        raise DataLoadError(
            f"{name} = {found[row]!r} does not match the grid value {expected[row]!r}", path, line_number=row + 2
        )


def load_sampled_function(path: Path | str, engine: TransformEngine) -> SampledFunction:
    """Load physical values g(r_i) from an ``r,value`` CSV onto ``engine``'s grid.

    Raises:
        DataLoadError: If the file is missing, malformed or on another grid.
    """
    path = Path(path)
    radii, values = _load_columns(path, "r")
    _check_abscissae(path, radii, engine.physical.radii, "r")
    return SampledFunction.from_profile(engine, values)


def load_spectral_function(path: Path | str, engine: TransformEngine) -> SpectralFunction:
    """Load ĝ(k_i) from a ``k,value`` CSV onto ``engine``'s spectral grid."""
    path = Path(path)
    frequencies, values = _load_columns(path, "k")
    _check_abscissae(path, frequencies, engine.spectral.frequencies, "k")
    return SpectralFunction(engine, values)


__all__ = ["GRID_TOL", "DataLoadError", "load_sampled_function", "load_spectral_function"]
