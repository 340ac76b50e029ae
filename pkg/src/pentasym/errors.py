"""Shared exception types."""


class PentasymError(Exception):
    """Base class for errors raised by this package."""


class CapExceededError(PentasymError):
    """An input is larger than the configured size cap for the operation."""


class ParseError(PentasymError):
    """A text file could not be parsed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
