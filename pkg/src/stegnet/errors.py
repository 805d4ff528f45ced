"""Exception hierarchy shared by all stegnet modules."""

from __future__ import annotations


class StegnetError(Exception):
    """Base class for every error raised by this package."""


class GraphError(StegnetError, ValueError):
    """A graph, vertex id or weight violates the model invariants."""


class ParseError(GraphError):
    """Malformed SGN document. ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnknownVertexError(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class TerminalSpecError(StegnetError, ValueError):
    """Encoder/decoder sets are empty, overlapping or reference unknown vertices."""


class NoPathError(StegnetError):
    """Requested terminals are not mutually reachable."""


class SizeLimitError(StegnetError, ValueError):
    """Instance too large for an exact or exhaustive routine."""
