"""Lower bounds and exact optima for spanning 2-connectivity problems.

Three nested bounds are available, each exact:

* the degree bound ``n`` (every vertex needs two incident edges),
* the cut LP value: minimize the total fractional edge weight subject to
  every proper vertex cut carrying weight at least 2 and ``0 <= x_e <= 1``,
  solved by constraint generation in exact rational arithmetic,
* the true optimum, by branch and bound over edge deletions.

The branch and bound maintains the invariant that the current graph is
feasible; an edge is deleted only when feasibility survives.  Any spanning
solution with exactly ``n`` edges is a spanning cycle, so a Hamiltonian
cycle search settles the optimum immediately whenever one exists, and
otherwise raises the lower bound to ``n + 1``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .connectivity import is_2ecss, is_2vcss, min_global_cut
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    RatioViolationError,
    TooLargeError,
)
from .graph import Graph
from .simplex import GE, LE, lp_minimize

DEFAULT_EXACT_LIMIT = 14

# Numerator/denominator of the guaranteed solution-size-to-optimum ratio.
RATIO_NUM = 9
RATIO_DEN = 7


def degree_lower_bound(g: Graph) -> int:
    """Every vertex of a feasible solution has degree >= 2, so opt >= n."""
    return g.n


def hamiltonian_cycle(g: Graph) -> frozenset[int] | None:
    """Edge set of some Hamiltonian cycle, or None.

    Deterministic backtracking from vertex 0 with ascending neighbor order;
    prunes states where an unvisited vertex cannot keep two usable ends.
    """
    n = g.n
    if n < 3:
        return None
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    if any(mask.bit_count() < 2 for mask in nbr):
        return None
    full = (1 << n) - 1
    failed: set[tuple[int, int]] = set()
    path = [0]

    def extend(cur: int, visited: int) -> bool:
        if visited == full:
            return bool(nbr[cur] & 1)
        if (cur, visited) in failed:
            return False
        free = ~visited & full
        # each unvisited vertex still needs 2 usable endpoints
        usable = free | (1 << cur) | 1
        rest = free
        while rest:
            b = rest & -rest
            rest ^= b
            if (nbr[b.bit_length() - 1] & usable).bit_count() < 2:
                failed.add((cur, visited))
                return False
        cand = nbr[cur] & free
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            path.append(w)
            if extend(w, visited | b):
                return True
            path.pop()
        failed.add((cur, visited))
        return False

    if not extend(0, 1):
        return None
    cycle = [g.edge_id(path[i], path[i + 1]) for i in range(n - 1)]
    cycle.append(g.edge_id(path[-1], 0))
    return frozenset(cycle)


def _greedy_minimal(g: Graph, feasible, order) -> set[int]:
    cur = set(range(g.m))
    deg = [len(g.adj[v]) for v in range(g.n)]
    for e in order:
        u, v = g.edges[e]
        if deg[u] < 3 or deg[v] < 3:
            continue
        cur.discard(e)
        if feasible(g, cur):
            deg[u] -= 1
            deg[v] -= 1
        else:
            cur.add(e)
    return cur


def _exact_minimum(g: Graph, feasible, limit: int, budget_ms: float | None):
    n, m = g.n, g.m
    if n > limit:
        raise TooLargeError(f"n={n} exceeds exact-search limit {limit}")
    if not feasible(g, frozenset(range(m))):
        raise InfeasibleError("the graph itself is not feasible")
    cycle = hamiltonian_cycle(g)
    if cycle is not None:
        return n, cycle
    lb = n + 1
    best_set = min(
        _greedy_minimal(g, feasible, range(m)),
        _greedy_minimal(g, feasible, range(m - 1, -1, -1)),
        key=len,
    )
    best = len(best_set)
    if best == lb:
        return best, frozenset(best_set)

    deadline = None if budget_ms is None else time.perf_counter() + budget_ms / 1e3
    deg = [len(g.adj[v]) for v in range(n)]
    slack = sum(d - 2 for d in deg)  # all degrees >= 2 here
    cur = set(range(m))
    edges = g.edges
    best_frozen = frozenset(best_set)
    ticks = 0

    def search(i: int, cur_m: int) -> None:
        nonlocal best, best_frozen, slack, ticks
        ticks += 1
        if deadline is not None and not ticks % 1024 and time.perf_counter() > deadline:
            raise BudgetExceededError("exact search ran out of time budget")
        removable = min(m - i, cur_m - lb, slack // 2)
        if cur_m - removable >= best:
            return
        if i == m:
            if cur_m < best:
                best = cur_m
                best_frozen = frozenset(cur)
            return
        u, v = edges[i]
        if deg[u] > 2 and deg[v] > 2:
            cur.discard(i)
            if feasible(g, cur):
                # degrees stay >= 2, so slack loses exactly one per endpoint
                deg[u] -= 1
                deg[v] -= 1
                slack -= 2
                search(i + 1, cur_m - 1)
                slack += 2
                deg[u] += 1
                deg[v] += 1
            cur.add(i)
        search(i + 1, cur_m)

    search(0, m)
    return best, best_frozen


def exact_opt_2ecss(g: Graph, limit: int = DEFAULT_EXACT_LIMIT,
                    budget_ms: float | None = None):
    """Exact minimum size of a spanning 2-edge-connected subgraph.

    Returns ``(size, witness)``.  Requires the graph itself to be
    2-edge-connected and ``n`` within the search limit.
    """
    return _exact_minimum(g, is_2ecss, limit, budget_ms)


def exact_opt_2vcss(g: Graph, limit: int = DEFAULT_EXACT_LIMIT,
                    budget_ms: float | None = None):
    """Exact minimum size of a spanning 2-vertex-connected subgraph."""
    return _exact_minimum(g, is_2vcss, limit, budget_ms)


@dataclass(frozen=True)
class CutConstraint:
    """A proper vertex set; its cut must carry fractional weight >= 2.

    Stored canonically as the side containing vertex 0.
    """

    side: frozenset[int]


@dataclass(frozen=True)
class LpState:
    """Optimal restricted-LP assignment with the cuts that enforce it."""

    x: tuple[Fraction, ...]
    active_constraints: tuple[CutConstraint, ...]
    objective: Fraction


def _canonical_side(g: Graph, side: frozenset[int]) -> frozenset[int]:
    if 0 in side:
        return side
    return frozenset(range(g.n)) - side


def solve_cut_lp(g: Graph) -> LpState:
    """Exact optimum of the cut LP by constraint generation.

    Starts from the singleton cuts, solves the restricted LP exactly, asks
    the minimum-cut oracle for a violated cut, and repeats until every cut
    carries weight >= 2.  Upper bounds ``x_e <= 1`` join lazily when an
    optimum exceeds one.
    """
    if g.n < 3 or not is_2ecss(g, g.all_edges()):
        raise InfeasibleError("cut LP needs a 2-edge-connected graph")
    n, m = g.n, g.m
    objective = [1] * m
    sides: list[frozenset[int]] = [
        _canonical_side(g, frozenset({v})) for v in range(n)
    ]
    seen = set(sides)
    capped: set[int] = set()
    while True:
        rows = []
        for side in sides:
            coeffs = [0] * m
            for e, (u, v) in enumerate(g.edges):
                if (u in side) != (v in side):
                    coeffs[e] = 1
            rows.append((coeffs, GE, 2))
        for e in sorted(capped):
            coeffs = [0] * m
            coeffs[e] = 1
            rows.append((coeffs, LE, 1))
        value, x = lp_minimize(objective, rows)
        over = [e for e in range(m) if x[e] > 1]
        if over:
            capped.update(over)
            continue
        cut_value, side = min_global_cut(g, x)
        if cut_value >= 2:
            return LpState(
                x=tuple(x),
                active_constraints=tuple(CutConstraint(s) for s in sides),
                objective=value,
            )
        side = _canonical_side(g, side)
        assert side not in seen, "separation returned a satisfied cut"
        sides.append(side)
        seen.add(side)


def lp_cut_bound(g: Graph) -> Fraction:
    """Value of the cut LP; a lower bound on the 2-edge-connected optimum."""
    return solve_cut_lp(g).objective


@dataclass(frozen=True)
class BoundReport:
    """Bounds gathered for one instance, ordered degree <= lp <= ec <= vc."""

    degree_bound: int
    lp_value: Fraction | None = None
    exact_ec: int | None = None
    exact_vc: int | None = None
    witness_ec: frozenset[int] | None = None
    witness_vc: frozenset[int] | None = None


def check_ratio(size: int, opt: int, label: str) -> None:
    """Exact integer guard: RATIO_DEN * size must stay <= RATIO_NUM * opt."""
    if RATIO_DEN * size > RATIO_NUM * opt:
        raise RatioViolationError(
            f"{label}: {RATIO_DEN}*{size} > {RATIO_NUM}*{opt}"
        )


def bound_report(g: Graph, result, want_lp: bool = False,
                 want_exact: bool = False, want_exact_vc: bool = False,
                 limit: int = DEFAULT_EXACT_LIMIT,
                 budget_ms: float | None = None) -> BoundReport:
    """Assemble the requested bounds and guard the ratio of ``result``.

    ``result`` is a ``SolveResult``; when the exact 2-edge-connected optimum
    is computed, a ratio beyond the guarantee raises
    :class:`RatioViolationError` because it can only mean a bug.
    """
    lp_value = lp_cut_bound(g) if want_lp else None
    exact_ec = witness_ec = None
    exact_vc = witness_vc = None
    if want_exact:
        exact_ec, witness_ec = exact_opt_2ecss(g, limit=limit, budget_ms=budget_ms)
        check_ratio(len(result.f), exact_ec, "solution before clean-up")
        check_ratio(len(result.f_bar), exact_ec, "cleaned solution")
    if want_exact_vc:
        exact_vc, witness_vc = exact_opt_2vcss(g, limit=limit, budget_ms=budget_ms)
    return BoundReport(
        degree_bound=degree_lower_bound(g),
        lp_value=lp_value,
        exact_ec=exact_ec,
        exact_vc=exact_vc,
        witness_ec=witness_ec,
        witness_vc=witness_vc,
    )


def format_fraction(value: Fraction) -> str:
    return str(value)


def report_lines(g: Graph, result, report: BoundReport) -> list[str]:
    """Key=value lines consumed by the command-line tools."""
    lines = [
        f"n={g.n}",
        f"m={g.m}",
        f"F={len(result.f)}",
        f"Fbar={len(result.f_bar)}",
        f"degree_bound={report.degree_bound}",
    ]
    if report.lp_value is not None:
        lines.append(f"lp={format_fraction(report.lp_value)}")
    if report.exact_ec is not None:
        lines.append(f"opt_ec={report.exact_ec}")
    if report.exact_vc is not None:
        lines.append(f"opt_vc={report.exact_vc}")
    if report.exact_ec is not None:
        lines.append(f"ratio_F={float(Fraction(len(result.f), report.exact_ec))!r}")
        lines.append(
            f"ratio_Fbar={float(Fraction(len(result.f_bar), report.exact_ec))!r}"
        )
    return lines
