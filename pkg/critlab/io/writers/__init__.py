"""Result writers: CSV tables and the configuration manifest."""

from .tables import (
    format_value,
    write_csv,
    write_sampled_function,
    write_spectral_function,
    write_manifest,
)

__all__ = [
    "format_value",
    "write_csv",
    "write_sampled_function",
    "write_spectral_function",
    "write_manifest",
]
