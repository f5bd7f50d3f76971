"""Shared exception types with the CLI exit-code contract.

Exit codes: 1 user error, 2 resource budget exceeded, 3 internal invariant
violation.
"""

from __future__ import annotations


class CodfkitError(Exception):
    """Base class for user-facing errors (exit code 1)."""

    exit_code = 1


class ParseError(CodfkitError):
    def __init__(self, message: str, line: int = 1, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class BudgetError(CodfkitError):
    """A configured resource budget was exceeded (exit code 2)."""

    exit_code = 2

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = stats or {}


class InternalError(CodfkitError):
    """An internal invariant failed; never a silently wrong answer."""

    exit_code = 3
