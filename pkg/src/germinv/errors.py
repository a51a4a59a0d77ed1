"""Exception hierarchy.

Every error carries the process exit code the command line maps it to:
1 for input problems, 2 for violated mathematical preconditions, 3 for
genericity certification failures and 4 for identity/consistency failures.
"""

from __future__ import annotations


class GermError(Exception):
    exit_code = 1


class ParseError(GermError):
    """Malformed polynomial text; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.message = message
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class RingMismatchError(GermError, ValueError):
    pass


class SaturationLimitError(GermError):
    pass


class PreconditionError(GermError):
    exit_code = 2


class NonIsolatedSingularityError(PreconditionError):
    pass


class NotICISError(PreconditionError):
    pass


class DimensionMismatchError(PreconditionError):
    pass


class AdmissibilityError(PreconditionError):
    pass


class UnsupportedCaseError(PreconditionError):
    pass


class GenericityError(GermError):
    exit_code = 3


class InconsistencyError(GermError):
    """Two routes to the same number disagreed."""

    exit_code = 4

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
