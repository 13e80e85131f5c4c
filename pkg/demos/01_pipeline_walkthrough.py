"""Walk through the solver pipeline on small graphs, phase by phase.

Run with:  python3 demos/01_pipeline_walkthrough.py
"""

from twospan import (
    build_graph,
    decompose,
    edge_pairs,
    minimal_2vcss,
    segment_strength,
    side_vertices,
    solve_block,
)

# K5 minus one edge: the smallest instance (in enumeration order) where the
# greedy minimal solution is not locally optimal and an improvement fires.
g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                    (2, 3), (2, 4)])
print("instance: K5 minus the edge (3,4)  n=%d m=%d" % (g.n, g.m))

# Phase 1: delete edges greedily while 2-connectivity survives.
initial = minimal_2vcss(g)
print("\nphase 1, inclusion-minimal solution (%d edges):" % len(initial))
print("  ", edge_pairs(g, initial))

# The solution decomposes into segments: maximal paths whose interior
# vertices have degree 2.  Short strong segments are where improvements
# can happen.
dec = decompose(g, initial)
print("\nsegments of the minimal solution:")
for seg in dec.segments:
    strength = segment_strength(g, initial, seg).value
    sides = sorted(side_vertices(seg)) if seg.length >= 2 else []
    print("   path %-12s length %d  %-6s side vertices %s"
          % ("-".join(map(str, seg.vertices)), seg.length, strength, sides))

# Phases 2-4 in one call, with the trace of accepted changes.
result = solve_block(g)
print("\nfull pipeline:")
for rec in result.trace:
    print("   phase %d %-9s added %s removed %s  cost %d -> %d"
          % (rec.step, rec.kind,
             [g.edges[e] for e in rec.added],
             [g.edges[e] for e in rec.removed],
             rec.cost_before, rec.cost_after))
print("sizes per phase:", result.sizes)
print("final solution:", edge_pairs(g, result.f))
print("the 5-cycle is optimal here: any spanning 2-connected subgraph "
      "needs at least n = 5 edges")

# A graph where the 2-vertex-connected and 2-edge-connected answers differ:
# two squares sharing vertex 0, tied together by the edge (2,5).  The tie
# is needed for 2-vertex-connectivity but not for 2-edge-connectivity, so
# the clean-up phase drops it.
h = build_graph(7, [(0, 1), (1, 2), (2, 3), (0, 3),
                    (0, 4), (4, 5), (5, 6), (0, 6), (2, 5)])
res = solve_block(h)
print("\ntwo squares sharing a vertex, plus a tie: |F|=%d but |Fbar|=%d"
      % (len(res.f), len(res.f_bar)))
print("dropped by the clean-up:", edge_pairs(h, res.f - res.f_bar))
