"""Exception hierarchy shared by all netrel modules.

Three families matter to callers: input errors (bad files), structural
errors (decompositions or rooting), and cap errors (a computation whose
state tables would blow past the configured size bound). The CLI maps
these to exit codes 1, 2 and 3 respectively.
"""


class NetrelError(Exception):
    """Base class for all errors raised by this package."""


class InputError(NetrelError):
    """A graph or decomposition file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphNotConnected(NetrelError):
    """Operation requires a connected graph."""


class NoBagContainsSource(NetrelError):
    """Rooting requested at a vertex that appears in no bag."""


class DecompositionInvalid(NetrelError):
    """A tree decomposition failed axiom validation."""


class TooManyEdges(NetrelError):
    """Exhaustive enumeration refused; edge count above the guard."""


class PartCapError(NetrelError):
    """A part would exceed the configured maximum edge count."""


class SeparatorTooLarge(PartCapError):
    """Shrinking would create a part over too many separator pairs."""


class MergedPartTooLarge(PartCapError):
    """Merging would create a part over too many endpoint pairs."""


class ShrinkError(NetrelError):
    """A precondition of the instance-shrinking operation failed."""


class SeparationInvalid(ShrinkError):
    """(A, B) does not cover the vertices or an edge crosses the split."""


class SourceNotInA(ShrinkError):
    """The source vertex must stay on the surviving side."""


class NoTargetInSeparator(ShrinkError):
    """A target vertex is required inside the separator."""


class PartStraddlesSeparation(ShrinkError):
    """A part has edges on both sides of the separation."""


class TStarNotInBStar(NetrelError):
    """Digest called with a pivot target outside the kept vertex set."""


class TStarNotTarget(NetrelError):
    """Digest called with a pivot vertex that is not a target."""
