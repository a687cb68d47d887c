"""Exception types shared across the package."""


class DigroupError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(DigroupError, ValueError):
    """Input data violates a structural precondition (bad index, bad table)."""


class InvalidDigroupError(DigroupError):
    """A table-defined structure fails the digroup axioms."""


class MissingInterpretationError(DigroupError, KeyError):
    """A pointed word mentions a symbol the interpretation does not cover."""


class PointedWordSyntaxError(MalformedInputError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)


class BoundExceededError(DigroupError):
    """A bounded enumeration would exceed its configured resource cap."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})
