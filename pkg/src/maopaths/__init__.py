"""Maximal adjacency orderings and linear-time internally vertex-disjoint paths."""

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    MaoPathsError,
    ParseError,
    PreconditionError,
    SelfLoopError,
    VertexRangeError,
)
from .graph import Graph, min_degree, parse_graph, random_graph, render_graph
from .loose_ends import PathBundle, TraceEvent, loose_ends, replay_invariants
from .mao import (
    ForestDecomposition,
    MaoOrdering,
    TreeSystem,
    check_tree_system,
    compute_mao,
    forest_decomposition,
    tree_system,
    verify_mao,
)
from .matching_ends import (
    DualBundle,
    DualTraceEvent,
    StPathSet,
    fan_paths,
    matching_ends,
    replay_dual_invariants,
    set_paths,
)
from .oracle import (
    OracleResult,
    check_k_connected_suffix,
    max_disjoint_paths,
    verify_internally_disjoint,
    verify_sbar_disjoint,
)
from .verdict import Verdict

__all__ = [name for name in dir() if not name.startswith("_")]
