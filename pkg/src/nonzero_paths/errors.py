"""Exception hierarchy shared by the library and the CLI."""


class NonZeroPathError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(NonZeroPathError, ValueError):
    """An operation was called with arguments outside its contract."""


class StructuralError(NonZeroPathError, ValueError):
    """A walk, graph or embedding is malformed."""


class InfeasibleError(NonZeroPathError, LookupError):
    """The requested path or vertex does not exist (e.g. unreachable)."""


class ParseError(NonZeroPathError, ValueError):
    """Malformed text input.  ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BudgetExceeded(NonZeroPathError, RuntimeError):
    """A brute-force enumeration hit its budget before finishing."""
