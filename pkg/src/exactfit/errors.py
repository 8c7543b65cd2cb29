"""Exception types shared across the package."""

from __future__ import annotations


class ExactFitError(Exception):
    """Base class for every error this package raises deliberately."""


class ParseError(ExactFitError, ValueError):
    """Malformed text: a scalar literal, a dataset row, or a model document.

    Position information is attached when known: ``offset`` is the byte
    offset of the first offending character in a scalar literal, ``line``
    the 1-based line of a bad CSV row, ``path`` the JSON path (like
    ``$.coefficients[2]``) of a schema violation.
    """

    def __init__(
        self,
        message: str,
        *,
        offset: int | None = None,
        line: int | None = None,
        path: str | None = None,
    ) -> None:
        super().__init__(message)
        self.offset = offset
        self.line = line
        self.path = path


class DataError(ExactFitError, ValueError):
    """Structurally invalid data, such as duplicate x values or no rows at all."""


class DomainError(ExactFitError, ValueError):
    """Input outside the mathematical domain of an operation."""
