"""Exception hierarchy shared by the kernel and the command line."""


class SatelimError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(SatelimError, ValueError):
    """An operation was called with arguments outside its contract."""


class ParseError(SatelimError, ValueError):
    """Malformed coefficient, polynomial or problem-file text."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: " if column is not None else f"line {line}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)


class FieldArithmeticError(SatelimError, ZeroDivisionError):
    """Division by zero in a coefficient field."""


class ExponentOverflowError(SatelimError, OverflowError):
    """An exponent left the supported range."""


class BudgetError(SatelimError, RuntimeError):
    """A Groebner basis computation exceeded its resource budget."""
