"""Exception hierarchy shared by the library and the CLI.

The CLI maps each class to an exit status: validation problems exit 1,
resource limits exit 2 and internal inconsistencies exit 3.
"""

from __future__ import annotations


class BigenicError(Exception):
    """Base class for every error raised on purpose by this package."""

    exit_status = 1


class ValidationError(BigenicError, ValueError):
    """Malformed input, violated arity bound or failed precondition."""

    exit_status = 1


class ResourceLimitError(BigenicError):
    """A request exceeds the configured desk-scale limits."""

    exit_status = 2


class InconsistencyError(BigenicError):
    """The knowledge base or a lemma check contradicted itself."""

    exit_status = 3

    def __init__(self, message: str, traces=None):
        super().__init__(message)
        self.traces = traces or []
