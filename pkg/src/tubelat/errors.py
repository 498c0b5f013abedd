"""Exception types shared by every module, plus the enumeration size guard."""

from __future__ import annotations

import os

DEFAULT_MAX_CELLS = 21


class ArgumentError(ValueError):
    """Input outside an operation's domain (bad index, non-reduced word, ...)."""


class CapacityError(RuntimeError):
    """An enumeration was asked for something larger than the configured guard."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; signals a non-member input or a bug."""


def max_cells() -> int:
    """Cell guard for exhaustive enumerations; TUBING_MAX_CELLS overrides it."""
    raw = os.environ.get("TUBING_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        return int(raw)
    except ValueError:
        raise ArgumentError(f"TUBING_MAX_CELLS must be an integer, got {raw!r}") from None


def check_cells(count: int, what: str) -> None:
    limit = max_cells()
    if count > limit:
        raise CapacityError(f"{what} needs {count} cells, guard is {limit} (set TUBING_MAX_CELLS)")
