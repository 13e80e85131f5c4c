"""Instance files, exhaustive enumeration, and seeded graph generators.

File grammar (one item per line, 0-based vertex ids)::

    c <free-form comment>
    p ec2 <n> <m>
    e <u> <v>

A canonical file has no comments and lists its edges sorted by endpoint
pair; :func:`serialize` always emits canonical text, so serialize(parse(t))
round-trips canonical files byte for byte.

Randomness contract: all generators draw from ``random.Random(seed)``
(MT19937) using only ``randrange``; selections use an explicit partial
Fisher-Yates shuffle.  Identical seeds therefore reproduce identical
instances across platforms and releases.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .connectivity import _reach
from .errors import (
    CountMismatchError,
    FormatError,
    TooLargeError,
    TooManyChordsError,
)
from .graph import Graph

ENUMERATION_MAX_N = 7


def parse_instance(text: str) -> Graph:
    """Parse instance text into a :class:`Graph` (edge ids in file order)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError("duplicate header", lineno)
            if len(fields) != 4 or fields[1] != "ec2":
                raise FormatError("expected 'p ec2 <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError("non-integer counts in header", lineno)
        elif fields[0] == "e":
            if n is None:
                raise FormatError("edge before header", lineno)
            if len(fields) != 3:
                raise FormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError("non-integer endpoint", lineno)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise FormatError("missing 'p ec2' header")
    if len(edges) != m:
        raise CountMismatchError(
            f"header promises {m} edges, file has {len(edges)}"
        )
    return Graph(n, edges)


def serialize(g: Graph) -> str:
    """Canonical instance text: sorted edges, no comments."""
    lines = [f"p ec2 {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def write_instance(path: Path | str, g: Graph) -> None:
    Path(path).write_text(serialize(g))


def read_instance(path: Path | str) -> Graph:
    return parse_instance(Path(path).read_text())


def _two_connected_masks(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All 2-connected labeled graphs on n vertices as edge tuples.

    Emits edge sets in lexicographic order of their sorted pair-index
    tuples, where pairs are ordered (0,1) < (0,2) < ... < (n-2,n-1).
    Degrees and adjacency masks are maintained incrementally along a
    depth-first walk of the subset tree.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    np_ = len(pairs)
    full = (1 << n) - 1
    deg = [0] * n
    nbr = [0] * n
    below2 = n  # vertices with degree < 2
    chosen: list[int] = []
    stack = [0]
    while stack:
        j = stack[-1]
        if j < np_:
            stack[-1] = j + 1
            u, v = pairs[j]
            deg[u] += 1
            deg[v] += 1
            if deg[u] == 2:
                below2 -= 1
            if deg[v] == 2:
                below2 -= 1
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
            chosen.append(j)
            if below2 == 0 and len(chosen) >= n and _mask_2connected(nbr, n, full):
                yield tuple(pairs[i] for i in chosen)
            stack.append(j + 1)
        else:
            stack.pop()
            if chosen:
                j = chosen.pop()
                u, v = pairs[j]
                if deg[u] == 2:
                    below2 += 1
                if deg[v] == 2:
                    below2 += 1
                deg[u] -= 1
                deg[v] -= 1
                nbr[u] ^= 1 << v
                nbr[v] ^= 1 << u


def _mask_2connected(nbr: list[int], n: int, full: int) -> bool:
    if n < 3:
        return False
    if _reach(nbr, 1, full) != full:
        return False
    for v in range(n):
        alive = full ^ (1 << v)
        if _reach(nbr, alive & -alive, alive) != alive:
            return False
    return True


def enumerate_2connected(n: int) -> Iterator[Graph]:
    """Every 2-connected labeled graph on ``n`` vertices, exactly once.

    Restricted to 3 <= n <= 7; beyond that the universe of labeled graphs
    is too large to sweep.
    """
    if not 3 <= n <= ENUMERATION_MAX_N:
        raise TooLargeError(f"exhaustive enumeration supports 3 <= n <= "
                            f"{ENUMERATION_MAX_N}, got {n}")
    for edges in _two_connected_masks(n):
        yield Graph(n, edges)


def _sample(rng: random.Random, pool: list, count: int) -> list:
    """First ``count`` items of a partial Fisher-Yates shuffle of ``pool``."""
    pool = list(pool)
    for i in range(count):
        j = i + rng.randrange(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:count]


def gen_cycle_plus_chords(n: int, c: int, seed: int) -> Graph:
    """Hamiltonian cycle 0-1-...-(n-1)-0 plus ``c`` distinct random chords.

    Always 2-connected.  Chords follow the cycle edges in the edge-id
    order, sorted by endpoint pair.
    """
    if n < 3:
        raise ValueError("need at least three vertices")
    chords = [
        (u, v)
        for u in range(n)
        for v in range(u + 2, n)
        if not (u == 0 and v == n - 1)
    ]
    if c < 0 or c > len(chords):
        raise TooManyChordsError(
            f"{c} chords requested, n={n} admits at most {len(chords)}"
        )
    cycle = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    picked = sorted(_sample(random.Random(seed), chords, c))
    return Graph(n, cycle + picked)


def gen_ear_graph(n_target: int, seed: int) -> Graph:
    """Random 2-connected graph built from a cycle by attaching open ears.

    Starts from a seeded cycle, then adds paths through fresh vertices
    between two distinct existing vertices until ``n_target`` vertices
    exist; finally a few single-edge ears join non-adjacent pairs (skipped
    when the pair is already adjacent, to keep the graph simple).
    """
    if n_target < 3:
        raise ValueError("need at least three vertices")
    rng = random.Random(seed)
    base = 3 if n_target == 3 else 3 + rng.randrange(n_target - 2)
    edges = [(i, i + 1) for i in range(base - 1)] + [(0, base - 1)]
    present = set(edges)
    n = base
    while n < n_target:
        fresh = 1 + rng.randrange(min(3, n_target - n))
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        path = [u] + list(range(n, n + fresh)) + [v]
        for a, b in zip(path, path[1:]):
            edge = (a, b) if a < b else (b, a)
            edges.append(edge)
            present.add(edge)
        n += fresh
    for _ in range(rng.randrange(3)):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edge = (u, v) if u < v else (v, u)
        if edge in present:
            continue
        edges.append(edge)
        present.add(edge)
    return Graph(n_target, edges)


@dataclass(frozen=True)
class CorpusSpec:
    """A reproducible family of generated instances.

    ``tight`` is a reserved slot for a worst-case family that drives the
    solver to its guaranteed ratio; no construction is wired up for it yet,
    so materializing it fails loudly.
    """

    family: str  # "cycle-chords", "ear", or the reserved "tight"
    count: int
    seed: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in ("cycle-chords", "ear", "tight"):
            raise ValueError(f"unknown family {self.family!r}")


def corpus_graphs(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    """Materialize a corpus: deterministic (name, graph) pairs.

    Parameters: ``n`` fixes the vertex count, or ``n_min``/``n_max`` draw
    it uniformly.  For cycle-chords, ``chords`` fixes the chord count; by
    default it is drawn uniformly from [1, n].
    """
    if spec.family == "tight":
        raise NotImplementedError(
            "no construction is known for the reserved worst-case family"
        )
    rng = random.Random(spec.seed)
    p = spec.params
    out = []
    for index in range(spec.count):
        if "n" in p:
            n = p["n"]
        else:
            n_min, n_max = p.get("n_min", 8), p.get("n_max", 14)
            n = n_min + rng.randrange(n_max - n_min + 1)
        sub_seed = rng.getrandbits(32)
        if spec.family == "cycle-chords":
            if "chords" in p:
                c = p["chords"]
            else:
                c = 1 + rng.randrange(n)
            c = min(c, n * (n - 3) // 2)
            g = gen_cycle_plus_chords(n, c, sub_seed)
        else:
            g = gen_ear_graph(n, sub_seed)
        out.append((f"{spec.seed}-{index:04d}", g))
    return out


def write_corpus(spec: CorpusSpec, outdir: Path | str) -> list[Path]:
    """Write a corpus under ``outdir/<family>/<seed>-<index>.ec2``."""
    root = Path(outdir) / spec.family
    root.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, g in corpus_graphs(spec):
        path = root / f"{name}.ec2"
        write_instance(path, g)
        paths.append(path)
    return paths
