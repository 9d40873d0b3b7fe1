"""Exception types shared across the package."""


class PBSError(Exception):
    """Base class for all package errors."""


class InvalidInput(PBSError, ValueError):
    """An argument is malformed or inconsistent (caller bug)."""


class DomainError(PBSError, ValueError):
    """Inputs are well-formed but outside the mathematical domain of the operation."""


class NumericError(PBSError, ArithmeticError):
    """A numerical procedure failed to converge or lost all precision."""


class PartialResult(PBSError):
    """A long-running computation was cut short; carries whatever completed.

    Attributes:
        completed: number of work units that finished.
        result: partial result object, or None.
    """

    def __init__(self, message, completed=0, result=None):
        super().__init__(message)
        self.completed = completed
        self.result = result
