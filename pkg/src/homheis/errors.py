"""Exception hierarchy shared by every module."""


class HomLieError(Exception):
    """Base class for all library errors."""


class ShapeError(HomLieError, ValueError):
    """Matrix or tensor dimensions do not fit the operation."""


class FieldError(HomLieError, ValueError):
    """A required eigenvalue (or square root) is not in Q(i)."""


class ValidationError(HomLieError, ValueError):
    """Input data violates a structural axiom.

    ``witnesses`` carries the offending basis tuples when available.
    """

    def __init__(self, message, witnesses=None):
        super().__init__(message)
        self.witnesses = list(witnesses or [])
