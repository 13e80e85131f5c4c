"""Lower bounds: degree bound, exact-rational cut LP, and exact optima.

Run with:  python3 demos/02_bounds_and_certificates.py
"""

from twospan import (
    build_graph,
    degree_lower_bound,
    exact_opt_2ecss,
    exact_opt_2vcss,
    lp_cut_bound,
    solve_cut_lp,
)

k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
k23 = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])

print("Every vertex needs two incident edges, so any solution has at least")
print("n edges; the cut LP sharpens that, and branch and bound is exact:\n")
for name, g in (("K4", k4), ("K2,3", k23)):
    print("%-5s degree>=%d  lp=%s  opt_ec=%d  opt_vc=%d"
          % (name, degree_lower_bound(g), lp_cut_bound(g),
             exact_opt_2ecss(g)[0], exact_opt_2vcss(g)[0]))

print("\nK2,3 is the interesting one: the degree bound says 5, but it has")
print("no spanning cycle, and the LP already certifies 6 exactly.")

# The LP works in exact rational arithmetic; on the Petersen graph the
# optimum is 10 and needs fractional weights (putting 2/3 on every edge is
# one optimal point; the simplex returns a half-integral vertex instead).
petersen = build_graph(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
])
state = solve_cut_lp(petersen)
print("\nPetersen graph: lp=%s with per-edge weight values %s"
      % (state.objective, sorted({str(x) for x in state.x})))
assert state.objective == 10
assert any(x.denominator > 1 for x in state.x)

# Constraint generation only ever materializes a few of the exponentially
# many cut constraints.
print("cuts generated: %d of %d proper vertex sets"
      % (len(state.active_constraints), 2 ** (petersen.n - 1) - 1))
