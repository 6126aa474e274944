"""Exception hierarchy shared by every module of the package."""


class CoronaDimError(Exception):
    """Base class for all errors raised by coronadim."""


class InvalidDescriptorError(CoronaDimError, ValueError):
    """A family descriptor has parameters outside the family's constraints."""


class SizeLimitError(CoronaDimError):
    """A construction would exceed the configured maximum order."""


class InvalidVertexError(CoronaDimError, IndexError):
    """A vertex id is out of range for the graph it refers to."""


class DisconnectedGraphError(CoronaDimError):
    """An operation that needs finite distances got a disconnected graph."""


class TrivialInputError(CoronaDimError):
    """The metric dimension search needs at least two vertices."""


class NotATreeError(CoronaDimError, ValueError):
    pass


class InconsistencyError(CoronaDimError):
    """Bound results contradict each other; always an implementation bug."""


class ExprSyntaxError(CoronaDimError, ValueError):
    """A graph expression failed to parse.

    ``offset`` is the 1-based character position where parsing stopped;
    an error at end of input points one past the last character.
    """

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")
