"""Exception hierarchy shared by the library and the command line."""


class WaringError(Exception):
    """Base class for all errors raised by this package."""


class FormSyntaxError(WaringError, ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ShapeError(WaringError, ValueError):
    """Wrong arity, degree, matrix size or index range."""


class ConsistencyError(WaringError, ArithmeticError):
    """An identity that must hold by construction was violated."""
