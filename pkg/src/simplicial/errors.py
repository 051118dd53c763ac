"""Exception hierarchy shared by the library and the CLI."""


class SimplicialError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SimplicialError, ValueError):
    """An argument violates an operation's precondition."""


class UndefinedDimensionError(SimplicialError):
    """The dimension of the void complex was requested."""


class UnsupportedError(SimplicialError):
    """The request is well formed but not supported (e.g. composite moduli)."""


class ParseError(SimplicialError):
    """A text file could not be parsed in the expected format."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
