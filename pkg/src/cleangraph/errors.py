"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CleanGraphError(Exception):
    """Base class for all errors raised by :mod:`cleangraph`."""


class SpecError(CleanGraphError, ValueError):
    """A ring description is malformed or semantically invalid.

    ``code`` is a short machine-readable tag (``"syntax"``, ``"nonprime"``,
    ``"nonmonic"``, ``"range"``, ``"invalid"``); ``offset`` is the byte
    offset into the parsed text when the error came from the parser.
    """

    def __init__(self, message: str, code: str = "invalid", offset: int | None = None):
        super().__init__(message)
        self.code = code
        self.offset = offset


class ParamError(CleanGraphError, ValueError):
    """Illegal parameters for a graph constructor."""


class BudgetError(CleanGraphError):
    """A configured size cap (ring order, vertex count, tiny-graph guard) was exceeded."""


class InconclusiveError(CleanGraphError):
    """An isomorphism search ran out of its node budget before deciding."""

    def __init__(self, message: str, search_nodes: int = 0):
        super().__init__(message)
        self.search_nodes = search_nodes


class DomainError(CleanGraphError, ValueError):
    """An argument is outside the mathematical domain of an operation."""
