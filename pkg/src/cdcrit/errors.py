"""Exception hierarchy shared by every cdcrit module."""

from __future__ import annotations


class CdcritError(Exception):
    """Base class for all library errors."""


class GraphError(CdcritError, ValueError):
    """Malformed graph input."""


class VertexRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EdgeExistsError(GraphError):
    pass


class EmptyVertexSetError(GraphError):
    pass


class JoinError(GraphError):
    pass


class DisconnectedGraphError(CdcritError, ValueError):
    """An operation that needs a connected graph received a disconnected one."""


class ParameterError(CdcritError, ValueError):
    """A family generator or checker got parameters outside its documented bounds."""


class ParityError(ParameterError):
    pass


class PreconditionError(CdcritError, ValueError):
    """A documented precondition (degree bound, class membership, ...) does not hold."""


class CapExceededError(CdcritError):
    """An exhaustive scan was asked to run above its scale cap."""

    def __init__(self, what: str, n: int, cap: int) -> None:
        super().__init__(f"{what}: n={n} exceeds scale cap {cap} (set CDCRIT_MAX_N to override)")
        self.what = what
        self.n = n
        self.cap = cap


class Graph6Error(CdcritError, ValueError):
    pass


class ReportMismatchError(CdcritError, ValueError):
    """A report was produced for a different graph than the one being checked."""
