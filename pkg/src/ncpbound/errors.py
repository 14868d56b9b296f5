"""Shared exception types; the CLI maps these to exit codes."""


class ValidationError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class IncompleteLocalData(ValidationError):
    """A local-degree map is missing a support place and was not flagged complete."""


class SearchExhausted(RuntimeError):
    """A bounded search ran out of candidates before satisfying its quota
    (CLI exit code 3).  Carries any partial results found."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
