"""Shared exception types."""


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class PreconditionFailedError(ValueError):
    """Inputs do not satisfy a documented precondition of the operation."""


class InputFormatError(ValueError):
    """Text or JSON input could not be parsed or failed validation."""


class UnknownSuiteError(ValueError):
    """A verification suite name is not recognised."""


class ElementNotFoundError(ValueError):
    """A poset operation referenced an element that is not present."""


class OutOfRangeError(ValueError):
    """A numeric argument is outside its documented range."""


class EmptyPartitionError(ValueError):
    """An operation that needs a nonempty partition received the empty one."""
