"""Exception types shared by the package."""

from __future__ import annotations


class MaoPathsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MaoPathsError, ValueError):
    """The edge-list document could not be parsed.

    ``lineno`` is 1-based and refers to the offending line of the input.
    """

    kind = "parse"

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class MalformedLineError(ParseError):
    kind = "malformed-line"


class VertexRangeError(ParseError):
    kind = "vertex-range"


class DuplicateEdgeError(ParseError):
    kind = "duplicate-edge"


class SelfLoopError(ParseError):
    kind = "self-loop"


class PreconditionError(MaoPathsError, ValueError):
    """An operation was called with arguments violating its precondition."""

    kind = "precondition"
