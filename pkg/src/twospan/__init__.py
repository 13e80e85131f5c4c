"""Minimum 2-edge- and 2-vertex-connected spanning subgraphs.

A local-search solver with a guaranteed 9/7 approximation ratio, exact
branch-and-bound oracles, and an exact-rational cut LP lower bound, plus
instance tooling for benchmarking the whole stack.
"""

from .bounds import (
    BoundReport,
    CutConstraint,
    LpState,
    bound_report,
    degree_lower_bound,
    exact_opt_2ecss,
    exact_opt_2vcss,
    hamiltonian_cycle,
    lp_cut_bound,
    solve_cut_lp,
)
from .connectivity import (
    BlockDecomposition,
    block_decomposition,
    find_bridges,
    find_cut_vertices,
    is_2ecss,
    is_2vcss,
    is_connected_spanning,
    min_global_cut,
)
from .graph import (
    EdgeSubset,
    Graph,
    build_graph,
    degree_in_subset,
    edge_pairs,
    from_labeled_edges,
    nonsolution_incident_edges,
    sorted_edges,
)
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
from .segments import (
    Segment,
    SegmentDecomposition,
    SegmentStrength,
    canonical_key,
    decompose,
    segment_strength,
    side_vertices,
)
from .solver import (
    ImprovementRecord,
    SolveResult,
    SolverConfig,
    deletion_operation,
    final_improvement,
    format_trace,
    improvement_loop,
    improvement_process,
    minimal_2vcss,
    remove_redundant,
    solve_block,
    solve_general,
    try_direct_improvement,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BoundReport",
    "CorpusSpec",
    "CutConstraint",
    "EdgeSubset",
    "Graph",
    "ImprovementRecord",
    "LpState",
    "Segment",
    "SegmentDecomposition",
    "SegmentStrength",
    "SolveResult",
    "SolverConfig",
    "block_decomposition",
    "bound_report",
    "build_graph",
    "canonical_key",
    "corpus_graphs",
    "decompose",
    "degree_in_subset",
    "degree_lower_bound",
    "deletion_operation",
    "edge_pairs",
    "enumerate_2connected",
    "exact_opt_2ecss",
    "exact_opt_2vcss",
    "final_improvement",
    "find_bridges",
    "find_cut_vertices",
    "format_trace",
    "from_labeled_edges",
    "gen_cycle_plus_chords",
    "gen_ear_graph",
    "hamiltonian_cycle",
    "improvement_loop",
    "improvement_process",
    "is_2ecss",
    "is_2vcss",
    "is_connected_spanning",
    "lp_cut_bound",
    "min_global_cut",
    "minimal_2vcss",
    "nonsolution_incident_edges",
    "parse_instance",
    "read_instance",
    "remove_redundant",
    "serialize",
    "segment_strength",
    "side_vertices",
    "solve_block",
    "solve_cut_lp",
    "solve_general",
    "sorted_edges",
    "try_direct_improvement",
    "write_corpus",
    "write_instance",
]
