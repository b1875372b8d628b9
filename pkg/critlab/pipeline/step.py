"""Protocol and Registry for experiment steps."""

from __future__ import annotations

from typing import Any, Callable, Protocol

from .context import ExperimentContext


class ExperimentStep(Protocol):
    """Protocol that all experiment steps must implement.

    A step takes an ExperimentContext, runs one computation (scan, wave
    curve, verify suites), writes its CSV output and returns the context.
    """

    def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
        """Process the context and return the updated context."""
        ...


# Central registry for experiment steps
_STEP_REGISTRY: dict[str, type] = {}


def register_step(name: str) -> Callable[[type], type]:
    """Decorator to register a new experiment step.

    Usage:
        @register_step("scan")
        class ScanStep:
            def process(self, context: ExperimentContext, **kwargs: Any) -> ExperimentContext:
                ...

    Raises:
        ValueError: If the name is already taken.
    """
    def decorator(cls: type) -> type:
        if name in _STEP_REGISTRY:
            raise ValueError(f"Experiment step '{name}' is already registered.")
        _STEP_REGISTRY[name] = cls
        return cls
    return decorator


def get_step(name: str) -> type:
    """Retrieve a registered step class by name.

    Raises:
        ValueError: If the step is not registered.
    """
    if name not in _STEP_REGISTRY:
        available = ", ".join(_STEP_REGISTRY.keys())
        raise ValueError(f"Unknown experiment step '{name}'. Available: {available}")
    return _STEP_REGISTRY[name]


def list_available_steps() -> list[str]:
    """Get a list of all registered experiment steps."""
    return list(_STEP_REGISTRY.keys())


__all__ = ["ExperimentStep", "register_step", "get_step", "list_available_steps"]
