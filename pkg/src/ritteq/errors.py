"""Exception hierarchy shared by every layer of the package."""


class RittError(Exception):
    """Base class for all errors raised by ritteq."""


class UsageError(RittError, ValueError):
    """Arguments violate an operation's preconditions."""


class DomainError(RittError, ValueError):
    """The operation is not defined for these inputs (e.g. Laurent outer with non-monomial inner)."""


class LimitError(RittError):
    """A configured conductor or degree bound was exceeded."""


class VerificationError(RittError):
    """An identity that was required to hold exactly does not hold.

    ``exponent`` is the smallest exponent at which the two sides differ, when known.
    """

    def __init__(self, message, exponent=None, lhs=None, rhs=None):
        super().__init__(message)
        self.exponent = exponent
        self.lhs = lhs
        self.rhs = rhs


class ParseError(RittError, ValueError):
    """Syntax error in an expression, with 1-based line and column."""

    def __init__(self, message, line, column, expected=()):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
        self.expected = tuple(expected)
