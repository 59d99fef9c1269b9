"""Shared exception types.

Caps and timeouts are first-class outcomes: sweep drivers catch them and
skip, they are never conflated with "no solution exists".
"""


class HoleforgeError(Exception):
    """Base class for all package errors."""


class Graph6Error(HoleforgeError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class VertexCapExceeded(HoleforgeError):
    """Input larger than the configured vertex cap for this operation."""

    def __init__(self, n, cap, what="operation"):
        super().__init__(f"{what}: graph has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


class SolverTimeout(HoleforgeError):
    """Exact search ran out of time budget. Distinct from infeasibility."""

    def __init__(self, what, seconds, best=None):
        super().__init__(f"{what}: timed out after {seconds:g}s")
        self.what = what
        self.seconds = seconds
        self.best = best


class DisconnectedGraph(HoleforgeError):
    """Operation requires a connected input; caller should decompose."""


class LongHoleDetected(HoleforgeError):
    """A hole of length >= 5 was found where none is allowed.

    ``witness`` is the offending induced cycle as a vertex tuple, or None
    when the detection is indirect (a structural assertion failed under
    trust mode and no explicit hole was recovered).
    """

    def __init__(self, witness=None, message=None):
        if message is None:
            if witness is not None:
                message = f"hole of length {len(witness)} found: {witness}"
            else:
                message = "input graph has a hole of length at least 5"
        super().__init__(message)
        self.witness = witness


class NoBisimplicialVertex(HoleforgeError):
    """Elimination got stuck: no bisimplicial vertex in the remaining graph.

    Signals that the input was not even-hole-free (or exposes a bug);
    ``stuck_vertices`` is the vertex set of the remaining subgraph.
    """

    def __init__(self, stuck_vertices):
        super().__init__(
            f"no bisimplicial vertex in remaining subgraph on {sorted(stuck_vertices)}"
        )
        self.stuck_vertices = tuple(sorted(stuck_vertices))


class NotTriangleFree(HoleforgeError):
    """Operation is only defined for triangle-free inputs."""

    def __init__(self, triangle):
        super().__init__(f"input has a triangle: {tuple(triangle)}")
        self.triangle = tuple(triangle)


class InternalInvariantError(HoleforgeError):
    """A checked internal invariant failed; indicates a bug, not bad input."""
