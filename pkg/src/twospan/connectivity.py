"""Connectivity oracles: bridges, cut vertices, blocks, and global min cut.

Bridges and cut vertices come from a single iterative lowpoint traversal of
the chosen edge subset.  The boolean feasibility tests (`is_2ecss`,
`is_2vcss`) are the innermost loop of the whole package, so 2-vertex
connectivity uses a bitmask reachability check instead: one BFS for
connectivity plus one BFS per deleted vertex, all on machine integers.

The global minimum cut is exact over rational weights.  Small instances are
solved by enumerating every side containing vertex 0; larger ones by
Edmonds-Karp max-flow queries that grow the lexicographically smallest
minimum-cut side one vertex at a time.  Both paths return the same canonical
answer: the minimum cut value together with the lexicographically smallest
side containing vertex 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import DisconnectedError
from .graph import Graph

# Above this vertex count min_global_cut switches from side enumeration to
# max-flow queries.
_ENUMERATION_LIMIT = 15


def _edge_flags(g: Graph, subset) -> bytearray:
    flags = bytearray(g.m)
    for e in subset:
        flags[e] = 1
    return flags


def _reach(nbr: list[int], seed: int, alive: int) -> int:
    """Vertices reachable from ``seed`` inside ``alive`` (all bitmasks)."""
    seen = seed
    frontier = seed
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= nbr[b.bit_length() - 1]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def _neighbor_masks(g: Graph, subset) -> list[int]:
    nbr = [0] * g.n
    edges = g.edges
    for e in subset:
        u, v = edges[e]
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return nbr


def _lowpoint(g: Graph, flags: bytearray):
    """Iterative lowpoint DFS over the subgraph (V, flagged edges).

    Returns ``(component_count, bridges, cut_vertices)`` where bridges is a
    list of edge ids and cut_vertices a list of vertex ids, both per
    component of the subgraph.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    pedge = [-1] * n
    is_cut = bytearray(n)
    bridges: list[int] = []
    components = 0
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        components += 1
        root_children = 0
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, 0)]
        while stack:
            v, i = stack[-1]
            av = adj[v]
            if i < len(av):
                stack[-1] = (v, i + 1)
                w, e = av[i]
                if not flags[e] or e == pedge[v]:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    pedge[w] = e
                    if v == root:
                        root_children += 1
                    stack.append((w, 0))
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] == disc[v]:  # no back edge leaves v's subtree
                        bridges.append(pedge[v])
                    if p != root and low[v] >= disc[p]:
                        is_cut[p] = 1
        if root_children >= 2:
            is_cut[root] = 1
    cuts = [v for v in range(n) if is_cut[v]]
    return components, bridges, cuts


def find_bridges(g: Graph, subset) -> frozenset[int]:
    """Edges of (V, subset) whose removal disconnects their component."""
    _, bridges, _ = _lowpoint(g, _edge_flags(g, subset))
    return frozenset(bridges)


def find_cut_vertices(g: Graph, subset) -> frozenset[int]:
    """Vertices of (V, subset) whose removal disconnects their component."""
    _, _, cuts = _lowpoint(g, _edge_flags(g, subset))
    return frozenset(cuts)


def is_connected_spanning(g: Graph, subset) -> bool:
    """True iff (V, subset) is connected and touches every vertex."""
    n = g.n
    if n == 0:
        return False
    nbr = _neighbor_masks(g, subset)
    full = (1 << n) - 1
    return _reach(nbr, 1, full) == full


def is_2ecss(g: Graph, subset) -> bool:
    """True iff (V, subset) is a spanning, connected, bridgeless subgraph."""
    flags = _edge_flags(g, subset)
    components, bridges, _ = _lowpoint(g, flags)
    return components == 1 and not bridges


def is_2vcss(g: Graph, subset) -> bool:
    """True iff (V, subset) is spanning, connected, and 2-vertex-connected.

    Graphs with fewer than 3 vertices are never 2-connected here; the
    predicate is total so segment-strength tests can rely on it.
    """
    n = g.n
    if n < 3:
        return False
    nbr = _neighbor_masks(g, subset)
    full = (1 << n) - 1
    if _reach(nbr, 1, full) != full:
        return False
    for v in range(n):
        alive = full ^ (1 << v)
        if _reach(nbr, alive & -alive, alive) != alive:
            return False
    return True


def _two_connected_on(g: Graph, subset, alive_mask: int) -> bool:
    """2-connectivity of the flagged edges on the ``alive_mask`` vertices.

    Assumes no flagged edge touches a dead vertex.  Fewer than three alive
    vertices never count as 2-connected.
    """
    if alive_mask.bit_count() < 3:
        return False
    nbr = _neighbor_masks(g, subset)
    if _reach(nbr, alive_mask & -alive_mask, alive_mask) != alive_mask:
        return False
    rest = alive_mask
    while rest:
        b = rest & -rest
        rest ^= b
        alive = alive_mask ^ b
        if _reach(nbr, alive & -alive, alive) != alive:
            return False
    return True


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal 2-connected subgraphs plus bridges as their own blocks."""

    blocks: tuple[tuple[frozenset[int], frozenset[int]], ...]
    cut_vertices: frozenset[int]
    bridge_edges: frozenset[int]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Split a connected graph into blocks (edge-disjoint, sorted by min id)."""
    n = g.n
    if n == 0:
        raise DisconnectedError("empty graph")
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    pedge = [-1] * n
    is_cut = bytearray(n)
    estack: list[int] = []
    blocks: list[list[int]] = []
    components = 0
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        components += 1
        root_children = 0
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, 0)]
        while stack:
            v, i = stack[-1]
            av = adj[v]
            if i < len(av):
                stack[-1] = (v, i + 1)
                w, e = av[i]
                if e == pedge[v]:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    pedge[w] = e
                    if v == root:
                        root_children += 1
                    estack.append(e)
                    stack.append((w, 0))
                elif disc[w] < disc[v]:
                    # back edge, recorded once from the deeper endpoint
                    estack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        # pop one block ending with the tree edge p-v
                        blk = []
                        while True:
                            e2 = estack.pop()
                            blk.append(e2)
                            if e2 == pedge[v]:
                                break
                        blocks.append(blk)
                        if p != root:
                            is_cut[p] = 1
        if root_children >= 2:
            is_cut[root] = 1
    if components != 1:
        raise DisconnectedError("graph is not connected")
    out = []
    bridge_edges = []
    for blk in blocks:
        verts = set()
        for e in blk:
            u, v = g.edges[e]
            verts.add(u)
            verts.add(v)
        if len(blk) == 1:
            bridge_edges.append(blk[0])
        out.append((frozenset(verts), frozenset(blk)))
    out.sort(key=lambda b: min(b[1]))
    return BlockDecomposition(
        blocks=tuple(out),
        cut_vertices=frozenset(v for v in range(n) if is_cut[v]),
        bridge_edges=frozenset(bridge_edges),
    )


def _cut_weight(g: Graph, weights, side_mask: int) -> Fraction:
    total = Fraction(0)
    for e, (u, v) in enumerate(g.edges):
        if ((side_mask >> u) ^ (side_mask >> v)) & 1:
            total += weights[e]
    return total


def _min_cut_enumerate(g: Graph, weights) -> tuple[Fraction, frozenset[int]]:
    n = g.n
    edges = g.edges
    best_val: Fraction | None = None
    best_side: tuple[int, ...] | None = None
    # sides containing vertex 0, proper and nonempty
    for half in range(0, (1 << (n - 1)) - 1):
        side = (half << 1) | 1
        total = Fraction(0)
        for e, (u, v) in enumerate(edges):
            if ((side >> u) ^ (side >> v)) & 1:
                total += weights[e]
        if best_val is None or total < best_val:
            best_val = total
            best_side = None  # recompute lazily
            best_mask = side
        elif total == best_val:
            if best_side is None:
                best_side = _mask_to_tuple(best_mask)
            cand = _mask_to_tuple(side)
            if cand < best_side:
                best_side = cand
                best_mask = side
    assert best_val is not None
    if best_side is None:
        best_side = _mask_to_tuple(best_mask)
    return best_val, frozenset(best_side)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return tuple(out)


def _max_flow(cap: dict[tuple[int, int], Fraction], nodes: list[int],
              s: int, t: int) -> Fraction:
    """Edmonds-Karp max flow on an undirected capacity map."""
    residual: dict[int, dict[int, Fraction]] = {v: {} for v in nodes}
    for (u, v), c in cap.items():
        residual[u][v] = residual[u].get(v, Fraction(0)) + c
        residual[v][u] = residual[v].get(u, Fraction(0)) + c
    flow = Fraction(0)
    while True:
        parent = {s: s}
        q = deque([s])
        while q and t not in parent:
            u = q.popleft()
            for v, c in residual[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    q.append(v)
        if t not in parent:
            return flow
        # bottleneck along the path
        bottleneck = None
        v = t
        while v != s:
            u = parent[v]
            c = residual[u][v]
            if bottleneck is None or c < bottleneck:
                bottleneck = c
            v = u
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= bottleneck
            residual[v][u] = residual[v].get(u, Fraction(0)) + bottleneck
            v = u
        flow += bottleneck


def _contracted_min_cut_value(g: Graph, weights, inside: frozenset[int],
                              outside: frozenset[int]) -> Fraction | None:
    """Minimum cut value over proper sides S with inside <= S, S & outside = 0.

    Returns None when no such proper side exists.
    """
    n = g.n
    label = {}
    for v in range(n):
        if v in inside:
            label[v] = -1
        elif v in outside:
            label[v] = -2
        else:
            label[v] = v
    free = [v for v in range(n) if label[v] >= 0]
    if not outside and not free:
        return None  # inside is everything: no proper superset side
    cap: dict[tuple[int, int], Fraction] = {}
    for e, (u, v) in enumerate(g.edges):
        a, b = label[u], label[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        cap[key] = cap.get(key, Fraction(0)) + weights[e]
    nodes = [-1] + ([-2] if outside else []) + free
    if outside:
        return _max_flow(cap, nodes, -1, -2)
    best = None
    for t in free:
        val = _max_flow(cap, nodes, -1, t)
        if best is None or val < best:
            best = val
    return best


def _min_cut_flow(g: Graph, weights) -> tuple[Fraction, frozenset[int]]:
    n = g.n
    lam = _contracted_min_cut_value(g, weights, frozenset({0}), frozenset())
    assert lam is not None
    inside = {0}
    outside: set[int] = set()
    for v in range(1, n):
        if _cut_weight(g, weights, _set_to_mask(inside)) == lam:
            # stopping here is the lexicographically smallest completion
            return lam, frozenset(inside)
        extended = _contracted_min_cut_value(
            g, weights, frozenset(inside | {v}), frozenset(outside)
        )
        if extended == lam:
            inside.add(v)
        else:
            outside.add(v)
    return lam, frozenset(inside)


def _set_to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def min_global_cut(g: Graph, weights) -> tuple[Fraction, frozenset[int]]:
    """Exact minimum-weight global cut of a connected graph.

    ``weights`` maps edge ids to nonnegative rationals (index-aligned with
    ``g.edges``).  Returns ``(value, side)`` where ``side`` is the
    lexicographically smallest minimum-cut side containing vertex 0.
    """
    if g.n < 2:
        raise DisconnectedError("a cut needs at least two vertices")
    if not is_connected_spanning(g, g.all_edges()):
        raise DisconnectedError("graph is not connected")
    if len(weights) != g.m:
        raise ValueError("one weight per edge required")
    ws = [Fraction(w) for w in weights]
    if any(w < 0 for w in ws):
        raise ValueError("weights must be nonnegative")
    if g.n <= _ENUMERATION_LIMIT:
        return _min_cut_enumerate(g, ws)
    return _min_cut_flow(g, ws)
