"""Exception types.

Every error raised on purpose by the library derives from :class:`GraphError`,
which the command line maps to exit code 1.
"""

from __future__ import annotations


class GraphError(Exception):
    """Base class for domain errors."""


# construction and parsing
class NotSimple(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotPlanar(GraphError):
    pass


class AsymmetricInput(GraphError):
    pass


class RotSyntaxError(GraphError):
    """Malformed ``.rot`` text."""


class TooLarge(GraphError):
    pass


# classification
class NotNP(GraphError):
    """Graph is not nearly Platonic.  ``reason`` is one of
    ``NotRegular``, ``NoMajorityFaceSize`` or ``DegreeTooSmall``."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class BadPathLength(GraphError):
    pass


class NotABlock(GraphError):
    pass


class NotTwoConnected(GraphError):
    pass


class WrongType(GraphError):
    pass


# families
class ParamTooSmall(GraphError):
    pass


class UnsupportedSolid(GraphError):
    pass


# surgery
class NotOnBoundary(GraphError):
    pass


class WrongSpan(GraphError):
    pass


class Disconnects(GraphError):
    pass


class NotOnFace(GraphError):
    pass


class AlreadyAdjacent(GraphError):
    pass


class EmptyArc(GraphError):
    pass


class NotOnCommonFace(GraphError):
    pass


class Adjacent(GraphError):
    pass


class BridgeCut(GraphError):
    pass


class IncompatibleMarks(GraphError):
    pass


class NotSimpleAfterGlue(GraphError):
    pass


class NotBarrelStructured(GraphError):
    pass


class TooSmall(GraphError):
    pass
