"""Immutable simple undirected graphs with dense integer vertex and edge ids.

Edge ids are assigned in input order and provide the canonical total order
used for deterministic tie-breaking everywhere in the package.  Candidate
solutions are plain ``frozenset`` (or ``set``) objects of edge ids; whenever
iteration order matters, callers sort the ids first (see
:func:`sorted_edges`).
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import DuplicateEdgeError, SelfLoopError, VertexRangeError

# A solution / edge subset is just a set of edge ids of one Graph.
EdgeSubset = frozenset


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable after construction and safe to share between
    threads.  ``edges[i]`` is the endpoint pair of edge id ``i`` stored as
    ``(min, max)``; ``adj[v]`` lists ``(neighbor, edge_id)`` in ascending
    edge-id order.
    """

    __slots__ = ("n", "edges", "adj", "_ids")

    def __init__(self, n: int, edge_list: Iterable[tuple[int, int]]):
        if n < 0:
            raise VertexRangeError("vertex count must be nonnegative")
        edges: list[tuple[int, int]] = []
        ids: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in ids:
                raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
            eid = len(edges)
            ids[(u, v)] = eid
            edges.append((u, v))
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.adj: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(a) for a in adj
        )
        self._ids = ids

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge {u, v}; raises ``KeyError`` if absent."""
        return self._ids[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._ids

    def all_edges(self) -> frozenset[int]:
        return frozenset(range(self.m))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a :class:`Graph`; edge ids follow list order."""
    return Graph(n, edge_list)


def from_labeled_edges(edge_list) -> tuple[Graph, tuple]:
    """Build a graph from edges over arbitrary sortable vertex labels.

    Labels are remapped to dense ids in sorted label order.  Returns the
    graph together with the label tuple (``labels[i]`` is the original
    label of vertex ``i``).
    """
    pairs = list(edge_list)
    labels = tuple(sorted({x for pair in pairs for x in pair}))
    index = {label: i for i, label in enumerate(labels)}
    return Graph(len(labels), [(index[u], index[v]) for u, v in pairs]), labels


def degree_in_subset(g: Graph, subset, v: int) -> int:
    """Number of edges of ``subset`` incident to ``v``."""
    return sum(1 for _, e in g.adj[v] if e in subset)


def nonsolution_incident_edges(g: Graph, subset, u: int) -> frozenset[int]:
    """Edges incident to ``u`` that are *not* in ``subset``."""
    return frozenset(e for _, e in g.adj[u] if e not in subset)


def sorted_edges(subset) -> tuple[int, ...]:
    """Edge ids of a subset in ascending (canonical) order."""
    return tuple(sorted(subset))


def edge_pairs(g: Graph, subset) -> list[tuple[int, int]]:
    """Endpoint pairs of a subset, ordered by ascending edge id."""
    return [g.edges[e] for e in sorted(subset)]
