"""Exception types shared across the package."""


class RamseyError(Exception):
    """Base class for all package errors."""


class ParameterError(RamseyError, ValueError):
    """An argument is outside the operation's domain."""


class PartialGraphError(RamseyError, ValueError):
    """A statistic was requested on a graph that still has uncoloured pairs."""


class ParseError(RamseyError, ValueError):
    """Malformed text input.

    ``offset`` is the byte offset into the offending line (graph6) or the
    line number (text formats), when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at {offset})"
        super().__init__(message)
        self.offset = offset


class TableRangeError(RamseyError, KeyError):
    """An edge-maximum table was queried outside its defined range."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""
