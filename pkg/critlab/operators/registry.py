"""Registry for operator families.

Usage:
    @operator_family("free")
    class FreeRadialFamily(OperatorFamily):
        ...

    family = get_operator_family("free")
    op = family.parse(["3"], "free:3")
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, TypeVar

if TYPE_CHECKING:
    from .base import OperatorFamily
    from .models import OperatorKind


_FAMILY_REGISTRY: dict[str, type[OperatorFamily]] = {}

T = TypeVar("T", bound="OperatorFamily")


def operator_family(prefix: str) -> Callable[[type[T]], type[T]]:
    """Decorator to register an operator family under its spec prefix."""
    def decorator(cls: type[T]) -> type[T]:
        register_operator_family(prefix, cls)
        return cls
    return decorator


def register_operator_family(prefix: str, family: type[OperatorFamily]) -> None:
    if prefix in _FAMILY_REGISTRY:
        raise ValueError(f"Operator family '{prefix}' is already registered.")
    _FAMILY_REGISTRY[prefix] = family


def get_operator_family(prefix: str) -> type[OperatorFamily]:
    """Look up a family by spec prefix.

    Raises:
        KeyError: If no family is registered under ``prefix``.
    """
    if prefix not in _FAMILY_REGISTRY:
        available = ", ".join(_FAMILY_REGISTRY.keys())
        raise KeyError(f"Unknown operator family '{prefix}'. Available: {available}")
    return _FAMILY_REGISTRY[prefix]


def family_for_kind(kind: OperatorKind) -> type[OperatorFamily]:
    """Find the registered family implementing ``kind``."""
    for family in _FAMILY_REGISTRY.values():
        if family.kind is kind:
            return family
    raise KeyError(f"No operator family registered for kind {kind.value}")


def list_operator_families() -> list[tuple[str, str, str]]:
    """Return ``(prefix, grammar, description)`` for every registered family."""
    return [(p, f.grammar, f.description) for p, f in _FAMILY_REGISTRY.items()]


__all__ = [
    "operator_family",
    "register_operator_family",
    "get_operator_family",
    "family_for_kind",
    "list_operator_families",
]
