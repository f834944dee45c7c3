"""Exception types shared across the package."""


class BicliqError(Exception):
    """Base class for package errors."""


class ParseError(BicliqError):
    """Malformed text input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(BicliqError):
    """An operation was called on input violating its stated precondition."""


class BudgetError(BicliqError):
    """A size or time limit makes the requested exact computation inadmissible."""
