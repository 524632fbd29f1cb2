"""Exception types shared across the package."""


class UsageError(ValueError):
    """A precondition on the arguments of an operation was violated."""


class ParseError(ValueError):
    """Malformed trigraph or DIMACS input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(RuntimeError):
    """The instance is larger than an exact routine is allowed to handle."""


class InvariantError(AssertionError):
    """An internal invariant that the math guarantees did not hold."""
