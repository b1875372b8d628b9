"""Unified I/O module: readers (CSV data loading) and writers (CSV results, manifests)."""

from .readers import DataLoadError, load_sampled_function, load_spectral_function
from .writers import (
    format_value,
    write_csv,
    write_sampled_function,
    write_spectral_function,
    write_manifest,
)

__all__ = [
    "DataLoadError",
    "load_sampled_function",
    "load_spectral_function",
    "format_value",
    "write_csv",
    "write_sampled_function",
    "write_spectral_function",
    "write_manifest",
]
