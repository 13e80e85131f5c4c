"""Exception types shared across the package."""


class SelfLoopError(ValueError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(ValueError):
    """The same unordered vertex pair appears twice in an edge list."""


class VertexRangeError(ValueError):
    """A vertex id lies outside [0, n)."""


class FormatError(ValueError):
    """An instance file does not follow the expected grammar."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CountMismatchError(FormatError):
    """The header edge count disagrees with the number of edge lines."""


class DisconnectedError(ValueError):
    """The graph is not connected where connectivity is required."""


class NotSpanningError(ValueError):
    """A candidate solution does not cover every vertex with degree >= 2."""


class NotTwoConnectedError(ValueError):
    """The input graph is not 2-vertex-connected where that is required."""


class TrivialSegmentError(ValueError):
    """A single-edge segment has no internal vertices to report."""


class InfeasibleError(ValueError):
    """No feasible spanning subgraph of the requested kind exists."""


class TooLargeError(ValueError):
    """The instance exceeds the configured size limit of an exact method."""


class BudgetExceededError(TooLargeError):
    """An exact computation ran past its wall-clock budget."""


class TooManyChordsError(ValueError):
    """A chord count exceeds what a simple graph on n vertices can hold."""


class RatioViolationError(RuntimeError):
    """A solution exceeded the guaranteed approximation ratio.

    This is never an acceptable outcome; it signals an implementation bug.
    """
