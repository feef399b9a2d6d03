"""Exception hierarchy.

Every error raised by the library derives from :class:`MSNError`, which is a
``ValueError`` so callers that only care about "bad input" can catch that.
Parse-time errors additionally carry the 1-based ``line`` of the first
offending record.
"""

from __future__ import annotations

from typing import Optional


class MSNError(ValueError):
    def __init__(self, message: str = "", *, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- model / construction -------------------------------------------------


class EmptyName(MSNError):
    pass


class DuplicateLayer(MSNError):
    pass


class InvalidLabel(MSNError):
    pass


class SelfLoop(MSNError):
    pass


class DuplicateEdge(MSNError):
    pass


class UnknownActor(MSNError):
    pass


class UnknownLayer(MSNError):
    pass


class NotFound(MSNError):
    pass


class EmptyLayerSet(MSNError):
    pass


class FrozenError(MSNError):
    """Mutation attempted on a frozen network."""


# -- model conversions ----------------------------------------------------


class NonInjectiveMapping(MSNError):
    pass


class UnmappedActor(MSNError):
    pass


class PartialMapping(MSNError):
    pass


class SelfPair(MSNError):
    pass


# -- dimensions / measures ------------------------------------------------


class EmptyWindow(MSNError):
    pass


class UnknownGroup(MSNError):
    pass


class TooFewActors(MSNError):
    pass


# -- file formats ---------------------------------------------------------


class ParseError(MSNError):
    """Base for malformed-input errors raised while reading files."""


class BadHeader(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class BadTimestamp(ParseError):
    pass


class UndeclaredLayer(ParseError):
    pass
