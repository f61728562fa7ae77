"""Exception types shared across the package."""

from __future__ import annotations


class SymcolError(Exception):
    """Base class for package-specific failures."""


class Graph6Error(SymcolError, ValueError):
    """Malformed graph6 text.  `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class NotApplicableError(SymcolError):
    """A construction or check was asked about a graph outside its preconditions."""


class BudgetExceededError(SymcolError):
    """A search or enumeration ran into its configured resource cap."""

    def __init__(self, message: str, *, nodes: int | None = None) -> None:
        super().__init__(message)
        self.nodes = nodes


class ConstructionDefectError(SymcolError):
    """A construction finished but its internal verifier rejected the result.

    This must never fire for in-contract inputs; it exists so a defect is loud
    instead of silently producing a bad coloring.
    """
