"""Survey solution quality against the exact optimum on random instances.

The solver guarantees size <= 9/7 * optimum for both outputs.  This script
measures how close it actually lands on a few hundred seeded instances.

Run with:  python3 demos/04_ratio_survey.py
"""

from collections import Counter
from fractions import Fraction

from twospan import (
    CorpusSpec,
    corpus_graphs,
    exact_opt_2ecss,
    solve_block,
)

GUARANTEE = Fraction(9, 7)

specs = [
    CorpusSpec(family="cycle-chords", count=150, seed=11,
               params={"n_min": 8, "n_max": 14}),
    CorpusSpec(family="ear", count=150, seed=12,
               params={"n_min": 8, "n_max": 14}),
]

histogram: Counter[Fraction] = Counter()
worst = Fraction(0)
worst_name = ""
optimal = 0
total = 0
for spec in specs:
    for name, g in corpus_graphs(spec):
        result = solve_block(g)
        opt, _ = exact_opt_2ecss(g)
        ratio = Fraction(len(result.f_bar), opt)
        assert 7 * len(result.f_bar) <= 9 * opt, "guarantee breached?!"
        histogram[ratio] += 1
        total += 1
        if ratio == 1:
            optimal += 1
        if ratio > worst:
            worst, worst_name = ratio, f"{spec.family}/{name}"

print("instances solved:      %d" % total)
print("solved to optimality:  %d (%.1f%%)" % (optimal, 100 * optimal / total))
print("worst ratio observed:  %s (~%.4f) on %s"
      % (worst, float(worst), worst_name))
print("guarantee:             %s (~%.4f)" % (GUARANTEE, float(GUARANTEE)))
print("\nratio histogram:")
for ratio in sorted(histogram):
    print("  %-6s %s" % (ratio, "#" * histogram[ratio]))
