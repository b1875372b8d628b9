"""CSV and manifest writers with bit-stable number formatting."""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from ...spectral import SampledFunction, SpectralFunction


def format_value(value: Any) -> str:
    """Render a cell: floats with 17 significant digits, None as empty, enums by value."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.17g}"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(getattr(value, "value", value))


def write_csv(path: Path | str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write a CSV with a mandatory header row.

    Returns:
        The written path.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError(f"row has {len(row)} cells, header has {len(header)}")
            writer.writerow([format_value(v) for v in row])
    return path


def _value_rows(abscissae: np.ndarray, values: np.ndarray) -> tuple[list[str], list[list[Any]]]:
    if np.iscomplexobj(values) and np.any(values.imag):
        return ["value", "imag"], [[x, v.real, v.imag] for x, v in zip(abscissae, values)]
    return ["value"], [[x, float(np.real(v))] for x, v in zip(abscissae, values)]


def write_sampled_function(path: Path | str, f: SampledFunction) -> Path:
    """``r,value`` CSV of the physical profile g(r_i)."""
    columns, rows = _value_rows(f.grid.radii, f.values)
    return write_csv(path, ["r", *columns], rows)


def write_spectral_function(path: Path | str, F: SpectralFunction) -> Path:
    """``k,value`` CSV of ĝ(k_i)."""
    columns, rows = _value_rows(F.grid.frequencies, F.samples)
    return write_csv(path, ["k", *columns], rows)


def write_manifest(path: Path | str, settings: Mapping[str, Any]) -> Path:
    """Sorted ``key = value`` lines echoing the effective configuration."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    for key in sorted(settings):
        value = settings[key]
        if isinstance(value, (list, tuple)):
            text = ",".join(format_value(v) for v in value)
        else:
            text = format_value(value)
        lines.append(f"{key} = {text}\n")
    path.write_text("".join(lines), encoding="utf-8")
    return path


__all__ = [
    "format_value",
    "write_csv",
    "write_sampled_function",
    "write_spectral_function",
    "write_manifest",
]
