"""Acceptance suite.

Each test prints one PASS line with its headline numbers so a full run
doubles as a report.  The heavy aggregates (exhaustive sweep, random
corpora) are computed once per session and shared.

A1  exhaustive ratio check: every 2-connected graph with n <= 6 plus a 10%
    slice of n = 7, solved and compared against the exact optimum with
    integer arithmetic; zero violations allowed.
A2  the same on 200 seeded cycle-plus-chords (n in [8,14], c in [1,n]) and
    100 seeded ear-built graphs (n <= 14).
A3  feasibility/minimality invariants on every A1-A2 instance.
A4  bridge/cut-vertex/min-cut oracles against naive deletion/enumeration.
A5  bound sandwich degree <= lp <= opt_ec <= opt_vc on all n <= 6
    instances, plus pinned LP values for cycles, K4 and K2,3.
A6  byte-identical stdout for repeated solve/bench runs on the A2 corpus.
A7  trace monotonicity on every A1-A2 instance.
A8  the three frozen witness fixtures fire their code paths (the tight
    worst-case family is not reconstructible, so the suite reports the
    worst ratio observed over A1-A2 instead).
"""

from __future__ import annotations

import io
import random
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from conftest import random_connected_graph
from oracles import naive_bridges, naive_cut_vertices, naive_min_cut
from test_solver import DIRECT_WITNESS, FINAL_WITNESS, RECURSION_WITNESS
from twospan import (
    CorpusSpec,
    Graph,
    build_graph,
    corpus_graphs,
    degree_lower_bound,
    enumerate_2connected,
    exact_opt_2ecss,
    exact_opt_2vcss,
    find_bridges,
    find_cut_vertices,
    is_2ecss,
    is_2vcss,
    lp_cut_bound,
    min_global_cut,
    solve_block,
    write_corpus,
)
from twospan.cli import main as cli_main
from twospan.instances import _two_connected_masks

GUARANTEE = Fraction(9, 7)

# counts of labeled 2-connected graphs; n <= 5 cross-checked against the
# naive filter in test_instances, larger ones frozen from the enumerator
EXPECTED_COUNTS = {3: 1, 4: 10, 5: 238, 6: 11368, 7: 1014888}

A2_SPECS = (
    CorpusSpec(family="cycle-chords", count=200, seed=1,
               params={"n_min": 8, "n_max": 14}),
    CorpusSpec(family="ear", count=100, seed=2,
               params={"n_min": 8, "n_max": 14}),
)


def _check_instance(g: Graph, agg: dict) -> None:
    """Solve one instance and fold ratio/invariant results into ``agg``."""
    res = solve_block(g)
    opt, _ = exact_opt_2ecss(g)
    agg["instances"] += 1
    # A1/A2: exact integer ratio guard
    if 7 * len(res.f) > 9 * opt or 7 * len(res.f_bar) > 9 * opt:
        agg["ratio_violations"].append((g.edges, len(res.f), len(res.f_bar), opt))
    agg["max_ratio_f"] = max(agg["max_ratio_f"], Fraction(len(res.f), opt))
    agg["max_ratio_fbar"] = max(agg["max_ratio_fbar"], Fraction(len(res.f_bar), opt))
    # A3: feasibility and minimality invariants
    if not is_2vcss(g, res.f) or not is_2ecss(g, res.f_bar):
        agg["feasibility_failures"].append(g.edges)
    if any(is_2vcss(g, res.f_initial - {e}) for e in res.f_initial):
        agg["minimality_failures"].append(g.edges)
    if any(is_2ecss(g, res.f_bar - {e}) for e in res.f_bar):
        agg["redundancy_failures"].append(g.edges)
    # A7: monotone trace and phase sizes
    s = res.sizes
    monotone = (s["initial"] >= s["after_improvements"] >= s["after_final"]
                >= s["cleaned"])
    if not monotone or any(r.cost_after >= r.cost_before for r in res.trace):
        agg["trace_failures"].append(g.edges)


def _new_agg() -> dict:
    return {
        "instances": 0,
        "ratio_violations": [],
        "feasibility_failures": [],
        "minimality_failures": [],
        "redundancy_failures": [],
        "trace_failures": [],
        "max_ratio_f": Fraction(0),
        "max_ratio_fbar": Fraction(0),
    }


@pytest.fixture(scope="module")
def a1_data():
    agg = _new_agg()
    counts = {}
    for n in (3, 4, 5, 6):
        counts[n] = 0
        for g in enumerate_2connected(n):
            counts[n] += 1
            _check_instance(g, agg)
    counts[7] = 0
    sampled = 0
    for idx, edges in enumerate(_two_connected_masks(7)):
        counts[7] += 1
        if idx % 10:
            continue
        sampled += 1
        _check_instance(Graph(7, edges), agg)
    agg["counts"] = counts
    agg["sampled_n7"] = sampled
    return agg


@pytest.fixture(scope="module")
def a2_data():
    agg = _new_agg()
    for spec in A2_SPECS:
        for _, g in corpus_graphs(spec):
            _check_instance(g, agg)
    return agg


def test_a1_exhaustive_ratio(a1_data):
    assert a1_data["counts"] == EXPECTED_COUNTS
    assert a1_data["ratio_violations"] == []
    total = a1_data["instances"]
    print(f"\nA1 PASS: {total} instances "
          f"(all n<=6 plus {a1_data['sampled_n7']} sampled n=7), "
          f"0 ratio violations, guarantee {GUARANTEE} respected")


def test_a2_random_corpora(a2_data):
    assert a2_data["instances"] == 300
    assert a2_data["ratio_violations"] == []
    print(f"\nA2 PASS: 300 seeded instances, 0 ratio violations, "
          f"max ratio F={a2_data['max_ratio_f']} "
          f"Fbar={a2_data['max_ratio_fbar']}")


def test_a3_feasibility_minimality(a1_data, a2_data):
    for agg in (a1_data, a2_data):
        assert agg["feasibility_failures"] == []
        assert agg["minimality_failures"] == []
        assert agg["redundancy_failures"] == []
    total = a1_data["instances"] + a2_data["instances"]
    print(f"\nA3 PASS: feasibility + minimality invariants on {total} instances")


def test_a4_oracle_equivalence():
    rng = random.Random(1234)
    for _ in range(500):
        n = 3 + rng.randrange(10)
        g = random_connected_graph(rng, n, rng.randrange(2 * n))
        subset = frozenset(e for e in range(g.m) if rng.randrange(4))
        assert find_bridges(g, subset) == naive_bridges(g, subset)
        assert find_cut_vertices(g, subset) == naive_cut_vertices(g, subset)
    for _ in range(200):
        n = 3 + rng.randrange(8)
        g = random_connected_graph(rng, n, rng.randrange(2 * n))
        weights = [Fraction(rng.randrange(6), rng.randrange(1, 5))
                   for _ in range(g.m)]
        assert min_global_cut(g, weights) == naive_min_cut(g, weights)
    print("\nA4 PASS: 500 bridge/cut-vertex and 200 min-cut oracle matches")


def test_a5_lp_sandwich():
    checked = 0
    for n in (3, 4, 5, 6):
        for g in enumerate_2connected(n):
            lo = degree_lower_bound(g)
            lp = lp_cut_bound(g)
            ec = exact_opt_2ecss(g)[0]
            vc = exact_opt_2vcss(g)[0]
            assert lo <= lp <= ec <= vc, g.edges
            checked += 1
    for n in range(3, 13):
        cycle = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
        assert lp_cut_bound(cycle) == n
    k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert lp_cut_bound(k4) == 4
    k23 = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert lp_cut_bound(k23) == 6
    print(f"\nA5 PASS: sandwich on {checked} instances, "
          f"lp(C_3..C_12)=n, lp(K4)=4, lp(K2,3)=6, all exact rationals")


def _run_cli(argv) -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(argv)
    return code, out.getvalue()


def test_a6_determinism(tmp_path):
    paths = []
    for spec in A2_SPECS:
        paths.extend(write_corpus(spec, tmp_path / "corpus"))
    bench1 = _run_cli(["bench", str(tmp_path / "corpus")])
    bench2 = _run_cli(["bench", str(tmp_path / "corpus")])
    assert bench1 == bench2
    assert bench1[0] == 0
    solve_outputs = []
    for path in paths[:5]:
        run1 = _run_cli(["solve", str(path)])
        run2 = _run_cli(["solve", str(path)])
        assert run1 == run2
        solve_outputs.append(run1)
    print(f"\nA6 PASS: byte-identical stdout for bench over {len(paths)} "
          f"instances and repeated solves")


def test_a7_trace_monotonicity(a1_data, a2_data):
    assert a1_data["trace_failures"] == []
    assert a2_data["trace_failures"] == []
    total = a1_data["instances"] + a2_data["instances"]
    print(f"\nA7 PASS: strict cost decrease and monotone phase sizes on "
          f"{total} traces")


def test_a8_witness_fixtures_and_worst_ratio(a1_data, a2_data):
    direct = solve_block(build_graph(*DIRECT_WITNESS))
    assert any(r.kind == "direct" for r in direct.trace)
    recursive = solve_block(build_graph(*RECURSION_WITNESS))
    assert any(r.kind == "recursive" and r.depth == 2 for r in recursive.trace)
    final = solve_block(build_graph(*FINAL_WITNESS))
    assert any(r.step == 3 for r in final.trace)
    worst_f = max(a1_data["max_ratio_f"], a2_data["max_ratio_f"])
    worst_fbar = max(a1_data["max_ratio_fbar"], a2_data["max_ratio_fbar"])
    assert worst_f <= GUARANTEE and worst_fbar <= GUARANTEE
    print("\nA8 PASS: direct/recursive(depth 2)/final witnesses fired; "
          f"worst observed ratio F={worst_f} (~{float(worst_f):.4f}), "
          f"Fbar={worst_fbar} (~{float(worst_fbar):.4f}) "
          f"vs guarantee {GUARANTEE} (~{float(GUARANTEE):.4f})")
