"""Naive reference implementations used only by the tests.

Everything here is deliberately brute force and independent of the library
internals: connectivity by breadth-first search over explicit adjacency,
bridges/cut vertices by deletion, optima by subset enumeration, minimum
cuts by enumerating every side.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def _components(n: int, pairs) -> int:
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return count


def naive_is_connected_spanning(g, subset) -> bool:
    pairs = [g.edges[e] for e in subset]
    touched = set()
    for u, v in pairs:
        touched.add(u)
        touched.add(v)
    if g.n > 1 and touched != set(range(g.n)):
        return False
    return _components(g.n, pairs) == 1


def naive_bridges(g, subset) -> frozenset:
    pairs = {e: g.edges[e] for e in subset}
    base = _components(g.n, pairs.values())
    out = set()
    for e in pairs:
        rest = [p for k, p in pairs.items() if k != e]
        if _components(g.n, rest) > base:
            out.add(e)
    return frozenset(out)


def naive_cut_vertices(g, subset) -> frozenset:
    """v is a cut vertex iff deleting it leaves more components than before
    (the deleted vertex itself does not count as one)."""
    pairs = [g.edges[e] for e in subset]
    base = _components(g.n, pairs)
    out = set()
    for v in range(g.n):
        remaining = [u for u in range(g.n) if u != v]
        relabel = {u: i for i, u in enumerate(remaining)}
        rest = [(relabel[a], relabel[b]) for a, b in pairs if a != v and b != v]
        if _components(g.n - 1, rest) > base:
            out.add(v)
    return frozenset(out)


def naive_is_2ecss(g, subset) -> bool:
    return naive_is_connected_spanning(g, subset) and not naive_bridges(g, subset)


def naive_is_2vcss(g, subset) -> bool:
    return (
        g.n >= 3
        and naive_is_connected_spanning(g, subset)
        and not naive_cut_vertices(g, subset)
    )


def naive_min_cut(g, weights):
    """Minimum cut by enumerating every side containing vertex 0."""
    n = g.n
    best = None
    best_side = None
    for half in range(0, (1 << (n - 1)) - 1):
        side = (half << 1) | 1
        total = Fraction(0)
        for e, (u, v) in enumerate(g.edges):
            if ((side >> u) ^ (side >> v)) & 1:
                total += Fraction(weights[e])
        members = tuple(v for v in range(n) if (side >> v) & 1)
        if best is None or total < best or (total == best and members < best_side):
            best = total
            best_side = members
    return best, frozenset(best_side)


def naive_exact_optimum(g, feasible):
    """Smallest feasible subset by size-ascending subset enumeration."""
    m = g.m
    for k in range(g.n, m + 1):
        for combo in itertools.combinations(range(m), k):
            if feasible(g, frozenset(combo)):
                return k, frozenset(combo)
    raise AssertionError("graph itself should have been feasible")


def naive_two_connected_graphs(n: int):
    """All labeled 2-connected graphs on n vertices by mask filtering."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = []
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        if len(chosen) < n:
            continue
        deg = [0] * n
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        if any(d < 2 for d in deg):
            continue
        if _components(n, chosen) != 1:
            continue
        ok = True
        for v in range(n):
            rest = [(a, b) for a, b in chosen if a != v and b != v]
            remaining = [u for u in range(n) if u != v]
            relabel = {u: i for i, u in enumerate(remaining)}
            if _components(n - 1, [(relabel[a], relabel[b]) for a, b in rest]) != 1:
                ok = False
                break
        if ok:
            out.append(frozenset(chosen))
    return out
