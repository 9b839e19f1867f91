"""Exact equidistant dimension of graphs.

Typical use::

    from eqdim import gen_t, all_pairs_distances, eqdim_exact
    g = gen_t(5)
    eqdim_exact(g).value  # 10
"""

from .bounds import BoundsReport, full_bounds, literature_bounds
from .errors import (
    BudgetExceeded,
    Disconnected,
    EqdimError,
    NTooSmall,
    ParityMismatch,
    SameVertex,
    SelfLoop,
    SizeCapExceeded,
    UnknownVertex,
)
from .graph import DistanceMatrix, Graph, GraphStats, all_pairs_distances, build_graph, graph_stats
from .hitting import (
    EqualizerCertificate,
    FailingPair,
    WitnessFamily,
    WSet,
    forced_pair_lower_bound,
    forced_pairs,
    is_distance_equalizer,
    w_set,
    witness_family,
)
from .polytopes import PolytopeClass, gen_r2, gen_s, gen_s2, gen_t, generate
from .solver import SolveResult, brute_force_eqdim, eqdim_exact

__all__ = [
    "BoundsReport", "BudgetExceeded", "Disconnected", "DistanceMatrix", "EqdimError",
    "EqualizerCertificate", "FailingPair", "Graph", "GraphStats", "NTooSmall",
    "ParityMismatch", "PolytopeClass", "SameVertex", "SelfLoop", "SizeCapExceeded",
    "SolveResult", "UnknownVertex", "WSet", "WitnessFamily", "all_pairs_distances",
    "brute_force_eqdim", "build_graph", "eqdim_exact", "forced_pair_lower_bound",
    "forced_pairs", "full_bounds", "gen_r2", "gen_s", "gen_s2", "gen_t", "generate",
    "graph_stats", "is_distance_equalizer", "literature_bounds", "w_set", "witness_family",
]
