"""Exception types shared across the package.

The CLI maps these onto exit codes: parse and contract errors are input
errors (exit 2), resource-limit errors are exit 3.
"""

from __future__ import annotations


class GraphParseError(ValueError):
    """Raised for malformed graph files; the message names the offending line."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ContractViolationError(ValueError):
    """Raised when an operation is called outside its documented domain."""


class ResourceLimitError(RuntimeError):
    """Raised when an explicit search or size budget is exhausted.

    Deliberately distinct from a negative result: a search that exhausts its
    node budget has *not* shown absence.
    """


class SamplingInfeasibleError(ResourceLimitError):
    """Raised when rejection sampling exceeds its attempt budget."""
