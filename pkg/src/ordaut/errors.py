"""Exception hierarchy shared by the library and the command line."""


class OrdautError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(OrdautError, ValueError):
    """Malformed ordinal text or automaton file."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(OrdautError, ValueError):
    """An input violates the documented precondition of an operation."""


class EmptyLanguageError(PreconditionError):
    """The automaton accepts no word; its ordinal is 0."""


class SearchBoundExceeded(PreconditionError):
    """An exhaustive search would have to go past its state bound."""
