"""Instance files, seeded generators, and exhaustive enumeration.

Run with:  python3 demos/03_generators_and_files.py
"""

import tempfile
from pathlib import Path

from twospan import (
    CorpusSpec,
    enumerate_2connected,
    gen_cycle_plus_chords,
    gen_ear_graph,
    is_2vcss,
    parse_instance,
    serialize,
    write_corpus,
)

# The text format: a header and one line per edge.
g = gen_cycle_plus_chords(6, 2, seed=42)
text = serialize(g)
print("a cycle with two random chords, serialized:")
print(text)
assert parse_instance(text).edges == tuple(sorted(g.edges))

# Generators are seeded and reproducible: same seed, same graph.
assert gen_cycle_plus_chords(6, 2, 42).edges == g.edges
assert gen_ear_graph(9, 7).edges == gen_ear_graph(9, 7).edges

# Ear-built graphs grow a cycle by repeatedly attaching paths through
# fresh vertices, which keeps them 2-connected by construction.
for seed in range(5):
    h = gen_ear_graph(10, seed)
    assert is_2vcss(h, h.all_edges())
    print("ear graph seed=%d: n=%d m=%d" % (seed, h.n, h.m))

# Exhaustive enumeration of small 2-connected graphs drives the
# acceptance suite; the counts grow quickly.
print("\nlabeled 2-connected graphs per vertex count:")
for n in (3, 4, 5):
    print("  n=%d: %d" % (n, sum(1 for _ in enumerate_2connected(n))))

# A corpus is a named, seeded family written as one file per instance.
with tempfile.TemporaryDirectory() as tmp:
    spec = CorpusSpec(family="cycle-chords", count=3, seed=5,
                      params={"n_min": 8, "n_max": 12})
    paths = write_corpus(spec, tmp)
    print("\ncorpus files:")
    for p in paths:
        print("  ", Path(p).relative_to(tmp))
