"""Segment decomposition of a candidate solution.

A *plain path* of a solution F is a path whose internal vertices all have
degree 2 in (V, F); a *segment* is a maximal plain path.  Segments run
between vertices of degree >= 3 ("high-degree" vertices).  An l-segment has
l edges; 1-segments are *trivial*, 2..4-segments *short*, longer ones
*long*.  A segment is *weak* on F when removing its edges together with its
internal vertices leaves a remainder that is not 2-connected, and *strong*
otherwise.

When F has no high-degree vertex at all it is a single spanning cycle; the
decomposition reports that through ``is_hamiltonian_cycle`` instead of
inventing a cyclic segment, and the solver treats such solutions as final.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .connectivity import _edge_flags, _neighbor_masks, _reach, _two_connected_on
from .errors import NotSpanningError, TrivialSegmentError
from .graph import Graph


class SegmentStrength(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class Segment:
    """A maximal plain path: ``vertices[i]``–``vertices[i+1]`` is ``edge_ids[i]``."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def internal_vertices(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def is_trivial(self) -> bool:
        return len(self.edge_ids) == 1

    @property
    def is_short(self) -> bool:
        return 2 <= len(self.edge_ids) <= 4


@dataclass(frozen=True)
class SegmentDecomposition:
    """Partition of a solution's edges into segments.

    ``edge_to_segment[e]`` is the index into ``segments`` for edge id ``e``,
    or -1 when ``e`` is not part of the solution.  ``segments`` is sorted by
    canonical key, so iteration order is deterministic.
    """

    segments: tuple[Segment, ...]
    edge_to_segment: tuple[int, ...]
    is_hamiltonian_cycle: bool


def canonical_key(segment: Segment) -> tuple[int, ...]:
    """Direction-independent identity: the lexicographically smaller
    orientation of the vertex sequence."""
    t = segment.vertices
    r = t[::-1]
    return t if t <= r else r


def side_vertices(segment: Segment) -> frozenset[int]:
    """The internal vertices adjacent to the segment's endpoints.

    For a 2-segment this is the single middle vertex.  Trivial segments
    have no internal vertices and are rejected.
    """
    if segment.length < 2:
        raise TrivialSegmentError("a 1-segment has no side vertices")
    return frozenset((segment.vertices[1], segment.vertices[-2]))


def decompose(g: Graph, solution) -> SegmentDecomposition:
    """Split ``solution`` into maximal plain paths between high-degree vertices.

    Requires the solution to span every vertex with degree >= 2 and to be
    connected (any 2-edge- or 2-vertex-connected spanning subgraph
    qualifies).
    """
    n = g.n
    flags = _edge_flags(g, solution)
    deg = [0] * n
    for e in solution:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    if any(d < 2 for d in deg):
        raise NotSpanningError("every vertex needs degree >= 2 in the solution")
    full = (1 << n) - 1 if n else 0
    if n == 0 or _reach(_neighbor_masks(g, solution), 1, full) != full:
        raise NotSpanningError("solution does not connect all vertices")

    hubs = [v for v in range(n) if deg[v] >= 3]
    mapping = [-1] * g.m
    if not hubs:
        # all degrees exactly 2 and connected: one spanning cycle
        return SegmentDecomposition((), tuple(mapping), True)

    assigned = bytearray(g.m)
    segments: list[Segment] = []
    for h in hubs:
        for w0, e0 in g.adj[h]:
            if not flags[e0] or assigned[e0]:
                continue
            verts = [h, w0]
            eids = [e0]
            assigned[e0] = 1
            cur = w0
            while deg[cur] == 2:
                for x, e2 in g.adj[cur]:
                    if flags[e2] and e2 != eids[-1]:
                        break
                assigned[e2] = 1
                eids.append(e2)
                verts.append(x)
                cur = x
            segments.append(Segment(tuple(verts), tuple(eids)))
    segments.sort(key=canonical_key)
    for i, seg in enumerate(segments):
        for e in seg.edge_ids:
            mapping[e] = i
    return SegmentDecomposition(tuple(segments), tuple(mapping), False)


def segment_strength(g: Graph, solution, segment: Segment) -> SegmentStrength:
    """Strength of ``segment`` with respect to ``solution``.

    Removal means deleting the segment's edges and its internal vertices
    (for a trivial segment, just the edge).  A remainder on fewer than three
    vertices counts as weak.
    """
    seg_edges = set(segment.edge_ids)
    remainder = [e for e in solution if e not in seg_edges]
    alive = (1 << g.n) - 1
    for v in segment.internal_vertices:
        alive ^= 1 << v
    if _two_connected_on(g, remainder, alive):
        return SegmentStrength.STRONG
    return SegmentStrength.WEAK
