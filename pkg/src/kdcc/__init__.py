"""k-diameter component connectivity: closed forms, witnesses, exact search.

A network is *operational* for a threshold k when some component has diameter
at least k, and in a *failure state* when every component's diameter falls
below k.  This package computes the minimum deletions that force a failure
state: the vertex variant (``cv``), the edge-only companion formulas, and the
mixed trade-off curve (``cm``, connectivity pairs), with closed-form
evaluators and constructive witnesses for five graph families plus an
exhaustive search that certifies the formulas on small instances.
"""

from .families import (
    Complete,
    CompleteBipartite,
    Cycle,
    FamilySpec,
    Path,
    PerfectTree,
    TreeCoordinate,
    build,
    level_size,
    tree_coordinate,
    tree_vertex_count,
    tree_vertex_id,
)
from .formulas import (
    CLOSED_FORM,
    EXTENSION_P0,
    ConnectivityCurve,
    CVResult,
    UnsupportedFamilyError,
    ce_bipartite,
    ce_path,
    cm,
    cm_tagged,
    curve,
    cv,
    tree_witness_cardinality,
)
from .graph import UNREACHABLE, Edge, Graph, GraphError, new_graph, normalize_edge
from .graphio import edge_list_text, load_graph, parse_dot, parse_edge_list, write_edge_list
from .oracle import (
    DEFAULT_EDGE_LIMIT,
    DEFAULT_VERTEX_LIMIT,
    OracleResult,
    PathPacking,
    SearchLimitExceeded,
    max_disjoint_k_paths,
    min_edge_disconnecting,
    min_mixed,
    min_vertex_disconnecting,
)
from .witnesses import (
    Witness,
    bipartite_mixed_witness,
    bipartite_vertex_witness,
    cycle_mixed_witness,
    cycle_vertex_witness,
    make_witness,
    mixed_witness,
    path_mixed_witness,
    path_vertex_witness,
    tree_vertex_witness,
    verify_witness,
    vertex_witness,
)

__version__ = "0.1.0"

__all__ = [
    "CLOSED_FORM",
    "Complete",
    "CompleteBipartite",
    "ConnectivityCurve",
    "CVResult",
    "Cycle",
    "DEFAULT_EDGE_LIMIT",
    "DEFAULT_VERTEX_LIMIT",
    "EXTENSION_P0",
    "Edge",
    "FamilySpec",
    "Graph",
    "GraphError",
    "OracleResult",
    "Path",
    "PathPacking",
    "PerfectTree",
    "SearchLimitExceeded",
    "TreeCoordinate",
    "UNREACHABLE",
    "UnsupportedFamilyError",
    "Witness",
    "bipartite_mixed_witness",
    "bipartite_vertex_witness",
    "build",
    "ce_bipartite",
    "ce_path",
    "cm",
    "cm_tagged",
    "curve",
    "cv",
    "cycle_mixed_witness",
    "cycle_vertex_witness",
    "edge_list_text",
    "level_size",
    "load_graph",
    "make_witness",
    "max_disjoint_k_paths",
    "min_edge_disconnecting",
    "min_mixed",
    "min_vertex_disconnecting",
    "mixed_witness",
    "new_graph",
    "normalize_edge",
    "parse_dot",
    "parse_edge_list",
    "path_mixed_witness",
    "path_vertex_witness",
    "tree_coordinate",
    "tree_vertex_count",
    "tree_vertex_id",
    "tree_vertex_witness",
    "tree_witness_cardinality",
    "verify_witness",
    "vertex_witness",
    "write_edge_list",
]
