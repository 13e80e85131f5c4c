"""Local-search solver for minimum 2-connected spanning subgraphs.

The pipeline runs four phases on a 2-connected input graph:

1. start from all edges and greedily delete until the solution is an
   inclusion-minimal 2-vertex-connected spanning subgraph;
2. repeatedly run *improvement processes*: at a side vertex ``u`` of a
   strong short segment, try to swap in k non-solution edges at ``u``
   (k = 1 or 2, a *critical edge set*) for k+1 solution edges; when no swap
   exists, tentatively add a critical edge set, recurse on the side
   vertices of newly appearing strong short segments, and on success clean
   up with a deletion pass that scans old solution edges before the added
   ones.  Each (segment, side vertex) pair is processed at most once,
   tracked by a registry that lives for the whole phase;
3. a final sweep: adding any outside edge that releases at least two
   solution edges is a net gain;
4. drop edges that 2-edge-connectivity does not need, yielding the pair
   (2-vertex-connected solution, smaller 2-edge-connected solution).

If the minimal solution from phase 1 is a spanning cycle it has exactly
``n`` edges, which is optimal, so the remaining phases are skipped.

Every accepted change strictly shrinks the solution.  A recursive
improvement is committed only when the cleaned-up solution is smaller than
the one the process started from, otherwise the original solution is
restored; this keeps the phase monotone and terminating.

All candidate enumeration is in ascending edge-id order, so a run is fully
deterministic; ``SolverConfig`` can replace the deletion scan order with a
seeded shuffle to diversify runs.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass

from .connectivity import block_decomposition, is_2vcss, is_2ecss
from .errors import InfeasibleError, NotTwoConnectedError
from .graph import Graph, nonsolution_incident_edges
from .segments import (
    Segment,
    SegmentStrength,
    canonical_key,
    decompose,
    segment_strength,
    side_vertices,
)

ASCENDING = "ascending"
SHUFFLE = "shuffle"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the pipeline; the default configuration is deterministic.

    ``deletion_order`` drives every greedy deletion scan (phases 1, 3, 4
    and the clean-up inside recursion).  Candidate enumeration for swaps is
    always canonical ascending order regardless of this setting.  The
    ``run_*`` switches exist for ablation experiments.
    """

    deletion_order: str = ASCENDING
    seed: int = 0
    run_improvements: bool = True
    run_final: bool = True
    run_cleanup: bool = True
    trace_verbosity: int = 0

    def __post_init__(self):
        if self.deletion_order not in (ASCENDING, SHUFFLE):
            raise ValueError(f"unknown deletion order {self.deletion_order!r}")


@dataclass(frozen=True)
class ImprovementRecord:
    """One committed solution change.

    ``step`` is the pipeline phase (2 or 3).  ``kind`` is ``"direct"`` for
    a one-shot swap, ``"recursive"`` for a swap found through recursion
    (``depth`` counts the process calls on the chain), or ``"final"`` for a
    phase-3 exchange.  ``added``/``removed`` are edge ids.
    """

    step: int
    kind: str
    k: int
    depth: int
    added: tuple[int, ...]
    removed: tuple[int, ...]
    segment: tuple[int, ...] | None
    side_vertex: int | None
    cost_before: int
    cost_after: int


@dataclass(frozen=True)
class SolveResult:
    """Solutions and bookkeeping from one run.

    ``f`` is 2-vertex-connected whenever ``vcss_valid`` (a single-block
    input); ``f_bar`` is always 2-edge-connected.  ``sizes`` records the
    solution size after each phase; ``timings`` the phase wall-clock
    seconds.
    """

    f: frozenset[int]
    f_bar: frozenset[int]
    f_initial: frozenset[int]
    trace: tuple[ImprovementRecord, ...]
    sizes: dict[str, int]
    timings: dict[str, float]
    vcss_valid: bool
    n_blocks: int


def _scan_order(g: Graph, cfg: SolverConfig) -> list[int] | None:
    """Edge-id ranking for deletion scans; None means ascending ids."""
    if cfg.deletion_order == ASCENDING:
        return None
    rank = list(range(g.m))
    random.Random(cfg.seed).shuffle(rank)
    pos = [0] * g.m
    for position, e in enumerate(rank):
        pos[e] = position
    return pos


def _ordered(pool, rank: list[int] | None) -> list[int]:
    if rank is None:
        return sorted(pool)
    return sorted(pool, key=rank.__getitem__)


def minimal_2vcss(g: Graph, cfg: SolverConfig | None = None) -> frozenset[int]:
    """Inclusion-minimal 2-vertex-connected spanning subgraph of ``g``.

    Scans edges in deletion order, dropping each one whose removal keeps
    the solution 2-connected.  One pass suffices: once an edge becomes
    undeletable it stays so as the solution shrinks.
    """
    cfg = cfg or SolverConfig()
    if not is_2vcss(g, g.all_edges()):
        raise NotTwoConnectedError("input graph is not 2-vertex-connected")
    rank = _scan_order(g, cfg)
    cur = set(range(g.m))
    deg = [len(g.adj[v]) for v in range(g.n)]
    for e in _ordered(cur, rank):
        u, v = g.edges[e]
        if deg[u] < 3 or deg[v] < 3:
            continue
        cur.discard(e)
        if is_2vcss(g, cur):
            deg[u] -= 1
            deg[v] -= 1
        else:
            cur.add(e)
    return frozenset(cur)


def deletion_operation(g: Graph, base, added, cfg: SolverConfig | None = None
                       ) -> frozenset[int]:
    """Greedy feasibility-preserving deletion, old edges before added ones.

    Scans ``base - added`` in deletion order, then ``added``, removing any
    edge whose removal keeps the solution 2-connected.  Scanning the added
    edges last keeps them in the solution whenever they are doing work.
    """
    cfg = cfg or SolverConfig()
    added = frozenset(added)
    if not added <= frozenset(base):
        raise ValueError("added edges must lie inside the base solution")
    if __debug__:
        assert is_2vcss(g, base)
    rank = _scan_order(g, cfg)
    cur = set(base)
    deg = [0] * g.n
    for e in cur:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    for e in _ordered(cur - added, rank) + _ordered(added, rank):
        u, v = g.edges[e]
        if deg[u] < 3 or deg[v] < 3:
            continue
        cur.discard(e)
        if is_2vcss(g, cur):
            deg[u] -= 1
            deg[v] -= 1
        else:
            cur.add(e)
    return frozenset(cur)


def try_direct_improvement(g: Graph, solution, segment: Segment, u: int):
    """First (added, removed) swap at ``u`` that trades k for k+1 edges.

    Searches k = 1 then k = 2; candidate added sets come from the
    non-solution edges at ``u`` and removal sets from the whole solution,
    both in ascending canonical order.  Returns None when no swap keeps the
    solution 2-connected.
    """
    incident = sorted(nonsolution_incident_edges(g, solution, u))
    if not incident:
        return None
    sol_sorted = sorted(solution)
    edges = g.edges
    base_deg = [0] * g.n
    for e in solution:
        a, b = edges[e]
        base_deg[a] += 1
        base_deg[b] += 1
    for k in (1, 2):
        for added in itertools.combinations(incident, k):
            deg = base_deg[:]
            for e in added:
                a, b = edges[e]
                deg[a] += 1
                deg[b] += 1
            trial = set(solution)
            trial.update(added)
            for removed in itertools.combinations(sol_sorted, k + 1):
                ok = True
                for e in removed:
                    a, b = edges[e]
                    deg[a] -= 1
                    deg[b] -= 1
                for e in removed:
                    a, b = edges[e]
                    if deg[a] < 2 or deg[b] < 2:
                        ok = False
                        break
                if ok:
                    trial.difference_update(removed)
                    if is_2vcss(g, trial):
                        return frozenset(added), frozenset(removed)
                    trial.update(removed)
                for e in removed:
                    a, b = edges[e]
                    deg[a] += 1
                    deg[b] += 1
    return None


def _critical_edge_sets(g: Graph, solution, u: int):
    """Candidate added sets at ``u``: singletons then pairs, ascending."""
    incident = sorted(nonsolution_incident_edges(g, solution, u))
    for e in incident:
        yield frozenset((e,))
    for pair in itertools.combinations(incident, 2):
        yield frozenset(pair)


class _Outcome:
    __slots__ = ("solution", "improved", "depth", "k")

    def __init__(self, solution, improved, depth, k):
        self.solution = solution
        self.improved = improved
        self.depth = depth
        self.k = k


def _process(g: Graph, base, segment: Segment, u: int, registry: set,
             cfg: SolverConfig, depth: int) -> _Outcome:
    registry.add((canonical_key(segment), u))
    direct = try_direct_improvement(g, base, segment, u)
    if direct is not None:
        added, removed = direct
        return _Outcome((frozenset(base) | added) - removed, True, depth,
                        len(added))
    base_keys = {canonical_key(s) for s in decompose(g, base).segments}
    for added in _critical_edge_sets(g, base, u):
        grown = frozenset(base) | added
        grown_dec = decompose(g, grown)
        for seg in grown_dec.segments:
            if not seg.is_short or canonical_key(seg) in base_keys:
                continue
            if segment_strength(g, grown, seg) is not SegmentStrength.STRONG:
                continue
            for v in sorted(side_vertices(seg)):
                if (canonical_key(seg), v) in registry:
                    continue
                inner = _process(g, grown, seg, v, registry, cfg, depth + 1)
                if not inner.improved:
                    continue
                cleaned = deletion_operation(
                    g, inner.solution, added & inner.solution, cfg
                )
                if len(cleaned) < len(base):
                    return _Outcome(cleaned, True, inner.depth, inner.k)
                # net gain vanished after clean-up: restore and keep looking
    return _Outcome(frozenset(base), False, depth, 0)


def improvement_process(g: Graph, solution, segment: Segment, u: int,
                        registry: set, cfg: SolverConfig | None = None):
    """Run one improvement process on ``(segment, u)``.

    Registers the pair, tries a direct swap, then recursive swaps through
    emerging strong short segments.  Returns ``(new_solution, improved)``;
    on failure the original solution is returned unchanged.
    """
    cfg = cfg or SolverConfig()
    if (canonical_key(segment), u) in registry:
        raise ValueError("improvement process already called on this pair")
    out = _process(g, solution, segment, u, registry, cfg, 1)
    return out.solution, out.improved


def _pick_pair(g: Graph, solution, dec, registry: set):
    """First unregistered (strong short segment, side vertex) pair."""
    for seg in dec.segments:
        if not seg.is_short:
            continue
        pending = [
            v for v in sorted(side_vertices(seg))
            if (canonical_key(seg), v) not in registry
        ]
        if not pending:
            continue
        if segment_strength(g, solution, seg) is SegmentStrength.STRONG:
            return seg, pending[0]
    return None


def improvement_loop(g: Graph, solution, cfg: SolverConfig | None = None,
                     trace: list | None = None) -> frozenset[int]:
    """Phase 2: run improvement processes until every pair is registered.

    The registry is shared by the whole phase, including all recursion, so
    the number of process invocations is bounded by the number of distinct
    (segment, side vertex) pairs ever seen.
    """
    cfg = cfg or SolverConfig()
    cur = frozenset(solution)
    registry: set = set()
    while True:
        dec = decompose(g, cur)
        if dec.is_hamiltonian_cycle:
            return cur
        pick = _pick_pair(g, cur, dec, registry)
        if pick is None:
            return cur
        seg, u = pick
        out = _process(g, cur, seg, u, registry, cfg, 1)
        if out.improved:
            new = out.solution
            if __debug__:
                assert is_2vcss(g, new)
                assert len(new) < len(cur)
            if trace is not None:
                trace.append(ImprovementRecord(
                    step=2,
                    kind="direct" if out.depth == 1 else "recursive",
                    k=out.k,
                    depth=out.depth,
                    added=tuple(sorted(new - cur)),
                    removed=tuple(sorted(cur - new)),
                    segment=canonical_key(seg),
                    side_vertex=u,
                    cost_before=len(cur),
                    cost_after=len(new),
                ))
            cur = new


def final_improvement(g: Graph, solution, cfg: SolverConfig | None = None,
                      trace: list | None = None) -> frozenset[int]:
    """Phase 3: adding one outside edge that frees two or more edges wins.

    For each outside edge in scan order: add it, greedily delete solution
    edges while 2-connectivity survives, and commit only when at least two
    deletions succeeded.  Passes repeat until none commits.
    """
    cfg = cfg or SolverConfig()
    rank = _scan_order(g, cfg)
    cur = set(solution)
    while True:
        committed = False
        outside = _ordered(set(range(g.m)) - cur, rank)
        for e in outside:
            trial = set(cur)
            trial.add(e)
            deg = [0] * g.n
            for e2 in trial:
                a, b = g.edges[e2]
                deg[a] += 1
                deg[b] += 1
            removed = []
            for cand in _ordered(cur, rank):
                a, b = g.edges[cand]
                if deg[a] < 3 or deg[b] < 3:
                    continue
                trial.discard(cand)
                if is_2vcss(g, trial):
                    deg[a] -= 1
                    deg[b] -= 1
                    removed.append(cand)
                else:
                    trial.add(cand)
            if len(removed) >= 2:
                if trace is not None:
                    trace.append(ImprovementRecord(
                        step=3,
                        kind="final",
                        k=1,
                        depth=0,
                        added=(e,),
                        removed=tuple(sorted(removed)),
                        segment=None,
                        side_vertex=None,
                        cost_before=len(cur),
                        cost_after=len(trial),
                    ))
                cur = trial
                committed = True
        if not committed:
            return frozenset(cur)


def remove_redundant(g: Graph, solution, cfg: SolverConfig | None = None
                     ) -> frozenset[int]:
    """Phase 4: drop edges that 2-edge-connectivity does not need."""
    cfg = cfg or SolverConfig()
    rank = _scan_order(g, cfg)
    cur = set(solution)
    deg = [0] * g.n
    for e in cur:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    for e in _ordered(cur, rank):
        u, v = g.edges[e]
        if deg[u] < 3 or deg[v] < 3:
            continue
        cur.discard(e)
        if is_2ecss(g, cur):
            deg[u] -= 1
            deg[v] -= 1
        else:
            cur.add(e)
    return frozenset(cur)


def solve_block(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Full pipeline on a 2-connected graph with at least three vertices."""
    cfg = cfg or SolverConfig()
    trace: list[ImprovementRecord] = []
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    initial = minimal_2vcss(g, cfg)
    timings["minimal"] = time.perf_counter() - t0
    sizes = {"initial": len(initial)}
    if cfg.trace_verbosity:
        log.info("minimal solution: %d of %d edges", len(initial), g.m)

    cur = initial
    if not decompose(g, cur).is_hamiltonian_cycle:
        t0 = time.perf_counter()
        if cfg.run_improvements:
            cur = improvement_loop(g, cur, cfg, trace)
        timings["improve"] = time.perf_counter() - t0
        sizes["after_improvements"] = len(cur)

        t0 = time.perf_counter()
        if cfg.run_final:
            cur = final_improvement(g, cur, cfg, trace)
        timings["final"] = time.perf_counter() - t0
        sizes["after_final"] = len(cur)

        t0 = time.perf_counter()
        cleaned = remove_redundant(g, cur, cfg) if cfg.run_cleanup else cur
        timings["cleanup"] = time.perf_counter() - t0
    else:
        # a spanning cycle has n edges: already optimal, nothing to improve
        if cfg.trace_verbosity:
            log.info("spanning cycle after phase 1: skipping phases 2-4")
        sizes["after_improvements"] = len(cur)
        sizes["after_final"] = len(cur)
        cleaned = cur
    sizes["cleaned"] = len(cleaned)
    if cfg.trace_verbosity:
        log.info("sizes per phase: %s", sizes)

    if __debug__:
        assert is_2vcss(g, cur)
        assert is_2ecss(g, cleaned)
    return SolveResult(
        f=cur,
        f_bar=cleaned,
        f_initial=initial,
        trace=tuple(trace),
        sizes=sizes,
        timings=timings,
        vcss_valid=True,
        n_blocks=1,
    )


def solve_general(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Solve a connected graph block by block.

    A bridge admits no 2-edge-connected spanning subgraph at all, so
    bridged inputs are rejected.  With a single block this is exactly
    :func:`solve_block`; otherwise the per-block solutions are merged and
    the merged solution is 2-edge-connected but not 2-vertex-connected
    (``vcss_valid`` is False).
    """
    cfg = cfg or SolverConfig()
    if g.n < 3:
        raise InfeasibleError("need at least three vertices")
    blocks = block_decomposition(g)  # raises DisconnectedError
    if blocks.bridge_edges:
        raise InfeasibleError("graph has a bridge; no 2-edge-connected "
                              "spanning subgraph exists")
    if len(blocks.blocks) == 1:
        return solve_block(g, cfg)

    merged_f: set[int] = set()
    merged_fbar: set[int] = set()
    merged_initial: set[int] = set()
    trace: list[ImprovementRecord] = []
    sizes: dict[str, int] = {}
    timings: dict[str, float] = {}
    for verts, eids in blocks.blocks:
        vmap = {v: i for i, v in enumerate(sorted(verts))}
        local_edges = []
        back = sorted(eids)
        for e in back:
            u, v = g.edges[e]
            local_edges.append((vmap[u], vmap[v]))
        sub = Graph(len(vmap), local_edges)
        res = solve_block(sub, cfg)
        merged_f.update(back[e] for e in res.f)
        merged_fbar.update(back[e] for e in res.f_bar)
        merged_initial.update(back[e] for e in res.f_initial)
        inverse = sorted(verts)
        for rec in res.trace:
            trace.append(ImprovementRecord(
                step=rec.step,
                kind=rec.kind,
                k=rec.k,
                depth=rec.depth,
                added=tuple(back[e] for e in rec.added),
                removed=tuple(back[e] for e in rec.removed),
                segment=None if rec.segment is None
                else tuple(inverse[v] for v in rec.segment),
                side_vertex=None if rec.side_vertex is None
                else inverse[rec.side_vertex],
                cost_before=rec.cost_before,
                cost_after=rec.cost_after,
            ))
        for key, val in res.sizes.items():
            sizes[key] = sizes.get(key, 0) + val
        for key, val in res.timings.items():
            timings[key] = timings.get(key, 0.0) + val
    return SolveResult(
        f=frozenset(merged_f),
        f_bar=frozenset(merged_fbar),
        f_initial=frozenset(merged_initial),
        trace=tuple(trace),
        sizes=sizes,
        timings=timings,
        vcss_valid=False,
        n_blocks=len(blocks.blocks),
    )


def format_trace(g: Graph, trace) -> list[str]:
    """Tab-separated trace lines: step, kind, k, added, removed, costs."""
    lines = []
    for rec in trace:
        kind = rec.kind if rec.kind != "recursive" else f"recursive:{rec.depth}"
        added = ",".join(f"{u}-{v}" for u, v in (g.edges[e] for e in rec.added))
        removed = ",".join(
            f"{u}-{v}" for u, v in (g.edges[e] for e in rec.removed)
        )
        lines.append("\t".join((
            str(rec.step), kind, str(rec.k),
            added or "-", removed or "-",
            str(rec.cost_before), str(rec.cost_after),
        )))
    return lines
