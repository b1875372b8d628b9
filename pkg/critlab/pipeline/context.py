"""State carried through the steps of one experiment run."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from .config import ExperimentConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VIOLATION = 3


class ExperimentContext(BaseModel):
    """Encapsulates the state of an experiment as it passes through the steps.

    Each step reads the configuration, appends its results and records the
    files it wrote under ``artifacts``.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    config: ExperimentConfig = Field(description="Effective configuration of the run.")
    output_dir: Path = Field(description="Directory receiving CSV outputs and the manifest.")

    results: dict[str, Any] = Field(
        default_factory=dict,
        description="Step name to the in-memory result of that step."
    )
    errors: list[str] = Field(
        default_factory=list,
        description="Usage and configuration errors; stop the run."
    )
    guard_trips: list[str] = Field(
        default_factory=list,
        description="Numerical guards tripped (resolution, underflow, quadrature)."
    )
    violations: list[str] = Field(
        default_factory=list,
        description="Failed property checks."
    )
    artifacts: dict[str, str] = Field(
        default_factory=dict,
        description="Artifact names (e.g. 'scan_csv') to written file paths."
    )

    @property
    def exit_code(self) -> int:
        if self.errors:
            return EXIT_USAGE
        if self.guard_trips:
            return EXIT_GUARD
        if self.violations:
            return EXIT_VIOLATION
        return EXIT_OK

    def output_path(self, filename: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / filename


__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_GUARD",
    "EXIT_VIOLATION",
    "ExperimentContext",
]
