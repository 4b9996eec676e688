"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: DomainError -> 1, IdealParseError -> 2,
ResourceLimitError -> 3.
"""


class SalabError(Exception):
    pass


class DomainError(SalabError):
    """A mathematical precondition was violated (wrong degree, wrong
    characteristic, ring mismatch, inhomogeneous input, ...)."""


class RingMismatchError(DomainError):
    pass


class IdealParseError(SalabError):
    """Parse failure with 1-based source position."""

    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class ResourceLimitError(SalabError):
    """A configured cap (instance count, resolution rank, ...) was exceeded."""
