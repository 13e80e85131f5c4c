"""Command-line interface.

Machine-first output: every command prints deterministic key=value lines on
stdout (same command + same files = byte-identical stdout); wall-clock
diagnostics go to stderr.  Exit codes: 0 ok, 1 usage/parse error,
2 infeasible instance, 3 verification failure, 4 ratio violation.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import (
    DEFAULT_EXACT_LIMIT,
    bound_report,
    exact_opt_2ecss,
    exact_opt_2vcss,
    lp_cut_bound,
    report_lines,
)
from .connectivity import find_bridges, find_cut_vertices, is_connected_spanning
from .errors import (
    BudgetExceededError,
    FormatError,
    InfeasibleError,
    RatioViolationError,
    TooLargeError,
)
from .graph import Graph
from .instances import (
    CorpusSpec,
    corpus_graphs,
    enumerate_2connected,
    gen_cycle_plus_chords,
    gen_ear_graph,
    parse_instance,
    read_instance,
    serialize,
    write_corpus,
    write_instance,
)
from .solver import SolverConfig, format_trace, solve_general

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_VERIFY = 3
EXIT_RATIO = 4


def _budget_ms() -> float | None:
    raw = os.environ.get("EC2_EXACT_BUDGET_MS")
    return float(raw) if raw else None


def _config(args) -> SolverConfig:
    return SolverConfig(deletion_order=args.order, seed=args.seed)


def _manifest(args, command: str, inputs: list[str]) -> list[str]:
    lines = [f"command={command}"]
    lines.extend(f"input={p}" for p in inputs)
    lines.append(f"version={__version__}")
    lines.append(f"order={args.order}")
    if args.order == "shuffle":
        lines.append(f"seed={args.seed}")
    lines.append(f"cfg_exact_limit={args.exact_limit}")
    if hasattr(args, "exact"):
        lines.append(f"cfg_exact={int(args.exact)}")
    if hasattr(args, "lp"):
        lines.append(f"cfg_lp={int(args.lp)}")
    return lines


def _solution_graph(g: Graph, subset) -> Graph:
    return Graph(g.n, [g.edges[e] for e in sorted(subset)])


def _print_block(lines: list[str], pretty: bool) -> None:
    if not pretty:
        print("\n".join(lines))
        return
    width = max(len(line.split("=", 1)[0]) for line in lines)
    for line in lines:
        key, _, value = line.partition("=")
        print(f"{key.ljust(width)}  {value}")


def cmd_solve(args) -> int:
    g = read_instance(args.instance)
    cfg = _config(args)
    result = solve_general(g, cfg)
    out = _manifest(args, "solve", [args.instance])
    out.append(f"blocks={result.n_blocks}")
    out.append(f"vcss_valid={int(result.vcss_valid)}")
    try:
        report = bound_report(
            g, result, want_lp=args.lp, want_exact=args.exact,
            limit=args.exact_limit, budget_ms=_budget_ms(),
        )
    except (TooLargeError, BudgetExceededError) as exc:
        print(f"exact oracle skipped: {exc}", file=sys.stderr)
        report = bound_report(g, result, want_lp=args.lp)
    out.extend(report_lines(g, result, report))
    _print_block(out, args.pretty)
    for key, val in sorted(result.timings.items()):
        print(f"time_{key}_s={val:.6f}", file=sys.stderr)
    if args.trace:
        Path(args.trace).write_text(
            "\n".join(format_trace(g, result.trace)) + "\n"
            if result.trace else ""
        )
    if args.emit_f:
        write_instance(args.emit_f, _solution_graph(g, result.f))
    if args.emit_fbar:
        write_instance(args.emit_fbar, _solution_graph(g, result.f_bar))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_instance(args.instance)
    sol = read_instance(args.solution)
    try:
        subset = frozenset(g.edge_id(u, v) for u, v in sol.edges)
    except KeyError:
        print("solution edge not present in instance")
        return EXIT_USAGE
    if sol.n != g.n:
        print("solution vertex count differs from instance")
        return EXIT_USAGE
    if args.mode == "vc" and g.n < 3:
        print("too few vertices for 2-connectivity")
        return EXIT_VERIFY
    if not is_connected_spanning(g, subset):
        print("disconnected")
        return EXIT_VERIFY
    bridges = find_bridges(g, subset)
    if args.mode == "ec":
        if bridges:
            u, v = g.edges[min(bridges)]
            print(f"bridge found: {u}-{v}")
            return EXIT_VERIFY
    else:
        cuts = find_cut_vertices(g, subset)
        if cuts:
            print(f"cut vertex {min(cuts)}")
            return EXIT_VERIFY
        if bridges:
            u, v = g.edges[min(bridges)]
            print(f"bridge found: {u}-{v}")
            return EXIT_VERIFY
    print("ok")
    return EXIT_OK


def _bench_one(name: str, text: str, order: str, seed: int, exact: bool,
               lp: bool, exact_limit: int) -> tuple[str, int, int, float]:
    """Worker for one instance: (line, violations, exact_skipped, seconds)."""
    start = time.perf_counter()
    try:
        g = parse_instance(text)
    except (FormatError, ValueError) as exc:
        return f"instance={name} error=parse:{exc}", 0, 0, 0.0
    cfg = SolverConfig(deletion_order=order, seed=seed)
    try:
        result = solve_general(g, cfg)
    except InfeasibleError:
        return (f"instance={name} error=infeasible", 0, 0,
                time.perf_counter() - start)
    fields = [
        f"instance={name}", f"n={g.n}", f"m={g.m}",
        f"F={len(result.f)}", f"Fbar={len(result.f_bar)}",
    ]
    violations = 0
    skipped = 0
    if exact:
        try:
            opt, _ = exact_opt_2ecss(g, limit=exact_limit,
                                     budget_ms=_budget_ms())
            fields.append(f"opt_ec={opt}")
            fields.append(f"ratio_F={float(Fraction(len(result.f), opt))!r}")
            fields.append(
                f"ratio_Fbar={float(Fraction(len(result.f_bar), opt))!r}"
            )
            if 7 * len(result.f) > 9 * opt or 7 * len(result.f_bar) > 9 * opt:
                violations = 1
                fields.append("violation=1")
        except (TooLargeError, BudgetExceededError):
            fields.append("opt_ec=NA")
            skipped = 1
    if lp:
        fields.append(f"lp={lp_cut_bound(g)}")
    return " ".join(fields), violations, skipped, time.perf_counter() - start


def _bench_star(packed):
    return _bench_one(*packed)


def _corpus_items(corpus: str) -> list[tuple[str, str]] | None:
    """Resolve a corpus argument to (name, instance text) pairs.

    Accepts a directory of .ec2 files, a single file, ``enum:<n>`` for the
    exhaustive sweep of 2-connected graphs, or a generator spec such as
    ``cycle-chords:count=200,seed=1,n_min=8,n_max=14`` (also ``n=`` and
    ``chords=``).
    """
    root = Path(corpus)
    if root.is_dir():
        return [(p.name, p.read_text())
                for p in sorted(root.rglob("*.ec2"))]
    if root.is_file():
        return [(root.name, root.read_text())]
    head, _, rest = corpus.partition(":")
    if head == "enum":
        n = int(rest)
        return [(f"enum{n}-{i:07d}", serialize(g))
                for i, g in enumerate(enumerate_2connected(n))]
    if head in ("cycle-chords", "ear"):
        params = {}
        count, seed = 10, 0
        for item in filter(None, rest.split(",")):
            key, _, value = item.partition("=")
            if key == "count":
                count = int(value)
            elif key == "seed":
                seed = int(value)
            elif key in ("n", "n_min", "n_max", "chords"):
                params[key] = int(value)
            else:
                raise ValueError(f"unknown corpus parameter {key!r}")
        spec = CorpusSpec(family=head, count=count, seed=seed, params=params)
        return [(name, serialize(g)) for name, g in corpus_graphs(spec)]
    return None


def cmd_bench(args) -> int:
    items = _corpus_items(args.corpus)
    if items is None:
        print(f"no such corpus: {args.corpus}", file=sys.stderr)
        return EXIT_USAGE
    out = _manifest(args, "bench", [args.corpus])
    jobs = [(name, text, args.order, args.seed, args.exact, args.lp,
             args.exact_limit) for name, text in items]
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            results = list(pool.imap(_bench_star, jobs))
    else:
        results = [_bench_one(*job) for job in jobs]
    violations = 0
    skipped = 0
    max_f = max_fbar = None
    seconds = []
    for line, viol, skip, took in results:
        out.append(line)
        violations += viol
        skipped += skip
        seconds.append(took)
        for tokenized in line.split():
            if tokenized.startswith("ratio_F="):
                val = float(tokenized.split("=", 1)[1])
                max_f = val if max_f is None else max(max_f, val)
            elif tokenized.startswith("ratio_Fbar="):
                val = float(tokenized.split("=", 1)[1])
                max_fbar = val if max_fbar is None else max(max_fbar, val)
    out.append(f"instances={len(items)}")
    out.append(f"violations={violations}")
    if skipped:
        out.append(f"exact_skipped={skipped}")
    if max_f is not None:
        out.append(f"max_ratio_F={max_f!r}")
        out.append(f"max_ratio_Fbar={max_fbar!r}")
    if args.pretty:
        for line in out:
            print(line.replace(" ", "\t"))
    else:
        print("\n".join(out))
    if seconds:
        ordered = sorted(seconds)
        print(f"time_total_s={sum(seconds):.6f}", file=sys.stderr)
        print(f"time_p50_s={ordered[len(ordered) // 2]:.6f}", file=sys.stderr)
        print(f"time_p90_s={ordered[(len(ordered) * 9) // 10]:.6f}",
              file=sys.stderr)
        print(f"time_max_s={ordered[-1]:.6f}", file=sys.stderr)
    return EXIT_RATIO if violations else EXIT_OK


def cmd_gen(args) -> int:
    if args.count == 1 and args.n is not None:
        # single instance with fully explicit parameters
        if args.family == "cycle-chords":
            c = args.chords if args.chords is not None else 1
            g = gen_cycle_plus_chords(args.n, c, args.seed)
        else:
            g = gen_ear_graph(args.n, args.seed)
        outdir = Path(args.out) / args.family
        outdir.mkdir(parents=True, exist_ok=True)
        path = outdir / f"{args.seed}-0000.ec2"
        write_instance(path, g)
        print(f"wrote={path}")
        return EXIT_OK
    params: dict = {}
    if args.n is not None:
        params["n"] = args.n
    else:
        params["n_min"] = args.n_min
        params["n_max"] = args.n_max
    if args.chords is not None:
        params["chords"] = args.chords
    spec = CorpusSpec(family=args.family, count=args.count, seed=args.seed,
                      params=params)
    for path in write_corpus(spec, args.out):
        print(f"wrote={path}")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = read_instance(args.instance)
    out = _manifest(args, "exact", [args.instance])
    budget = _budget_ms()
    ec, _ = exact_opt_2ecss(g, limit=args.exact_limit, budget_ms=budget)
    vc, _ = exact_opt_2vcss(g, limit=args.exact_limit, budget_ms=budget)
    out.append(f"opt_ec={ec}")
    out.append(f"opt_vc={vc}")
    print("\n".join(out))
    return EXIT_OK


def cmd_lp(args) -> int:
    g = read_instance(args.instance)
    out = _manifest(args, "lp", [args.instance])
    out.append(f"lp={lp_cut_bound(g)}")
    print("\n".join(out))
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=["ascending", "shuffle"],
                   default="ascending", help="deletion scan order")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for --order shuffle")
    p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT,
                   help="max n for exact oracles")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twospan",
        description="Minimum 2-edge-/2-vertex-connected spanning subgraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the solver on one instance")
    p.add_argument("instance")
    p.add_argument("--exact", action="store_true",
                   help="also compute the exact optimum and ratios")
    p.add_argument("--lp", action="store_true", help="also compute the LP bound")
    p.add_argument("--trace", metavar="PATH", help="write the solver trace")
    p.add_argument("--emit-f", metavar="PATH",
                   help="write the 2-vertex-connected solution")
    p.add_argument("--emit-fbar", metavar="PATH",
                   help="write the cleaned 2-edge-connected solution")
    p.add_argument("--pretty", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution file")
    p.add_argument("instance")
    p.add_argument("solution")
    p.add_argument("--mode", choices=["ec", "vc"], default="ec")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--lp", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="generate instances")
    p.add_argument("--family", choices=["cycle-chords", "ear"],
                   default="cycle-chords")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=14)
    p.add_argument("--chords", type=int, default=None)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=".")
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exact", help="exact optima for one instance")
    p.add_argument("instance")
    _add_common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("lp", help="cut LP lower bound for one instance")
    p.add_argument("instance")
    _add_common(p)
    p.set_defaults(func=cmd_lp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"missing file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except RatioViolationError as exc:
        print(f"ratio violation: {exc}", file=sys.stderr)
        return EXIT_RATIO
    except (TooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
