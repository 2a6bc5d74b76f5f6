"""Zero-divisor graphs of finite commutative semigroups with zero."""

from .errors import (
    DisconnectedError,
    EmptyPartListError,
    EmptySetError,
    MalformedTableError,
    OrderTooLargeError,
    SgtFormatError,
    TooFewVerticesError,
    UnknownExampleError,
    UnknownPredicateError,
    UnknownVertexError,
    ValidationError,
    ZdgError,
)
from .semigroup import (
    CayleyTable,
    ElementSet,
    PrimeDecomposition,
    Semigroup,
    group_with_zero,
    null_semigroup,
    orthogonal_union,
    powerset_semigroup,
    validate,
)
from .graph import (
    Graph,
    GraphMetrics,
    Partition,
    adjacency_listing,
    bridges,
    center,
    chromatic_number,
    clique_number,
    complete_multipartite_partition,
    cut_vertices,
    gamma,
    gamma_bar,
    girth,
    has_clique_of_size,
    median,
    metrics,
    minimal_edge_cutsets,
    minimal_vertex_cutsets,
    to_dot,
)
from .catalog import available, builtin_example
from .theorems import (
    Verdict,
    all_clauses,
    check_ass_properties,
    check_bridge,
    check_chromatic,
    check_cut_structures,
    check_median_center_ideals,
    check_nilpotent_subgraph,
    check_rpartite,
    failures,
    matches_selector,
    run_all,
)
from .enumeration import (
    AuditReport,
    ClauseTally,
    EnumerationOptions,
    audit,
    available_predicates,
    canonical_form,
    enumerate_semigroups,
    search,
)
from . import report, sgt

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "adjacency_listing",
    "all_clauses",
    "audit",
    "AuditReport",
    "available",
    "available_predicates",
    "bridges",
    "builtin_example",
    "canonical_form",
    "CayleyTable",
    "center",
    "check_ass_properties",
    "check_bridge",
    "check_chromatic",
    "check_cut_structures",
    "check_median_center_ideals",
    "check_nilpotent_subgraph",
    "check_rpartite",
    "chromatic_number",
    "ClauseTally",
    "clique_number",
    "complete_multipartite_partition",
    "cut_vertices",
    "DisconnectedError",
    "ElementSet",
    "EmptyPartListError",
    "EmptySetError",
    "enumerate_semigroups",
    "EnumerationOptions",
    "failures",
    "gamma",
    "gamma_bar",
    "girth",
    "Graph",
    "GraphMetrics",
    "group_with_zero",
    "has_clique_of_size",
    "MalformedTableError",
    "matches_selector",
    "median",
    "metrics",
    "minimal_edge_cutsets",
    "minimal_vertex_cutsets",
    "null_semigroup",
    "OrderTooLargeError",
    "orthogonal_union",
    "Partition",
    "powerset_semigroup",
    "PrimeDecomposition",
    "report",
    "run_all",
    "search",
    "Semigroup",
    "sgt",
    "SgtFormatError",
    "to_dot",
    "TooFewVerticesError",
    "UnknownExampleError",
    "UnknownPredicateError",
    "UnknownVertexError",
    "validate",
    "ValidationError",
    "Verdict",
    "ZdgError",
]
