"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An operation was called outside its domain."""


class DivisionByZero(InvalidArgument, ZeroDivisionError):
    pass


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a nonzero remainder.

    When this is raised on gcd output it means an internal invariant broke.
    """


class NotFound(LookupError):
    pass


class ParseError(InvalidArgument):
    """Malformed recurrence text, with a 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
