"""Exact minimum-cost homomorphism solving and complexity classification for
semicomplete bipartite (and multipartite) target digraphs."""

from .digraph import (
    BipartitionedDigraph,
    Digraph,
    UndirectedGraph,
    arc_subdigraph,
    converse,
    find_induced_subdigraph,
    format_digraph,
    is_extension_of,
    is_semicomplete_bipartite,
    parse_digraph,
    strong_components,
    underlying,
)
from .forbidden import (
    ForbiddenWitness,
    PatternCatalog,
    detect_forbidden,
    detect_long_induced_even_cycle,
    pattern_catalog,
)
from .ordering import (
    IntervalTable,
    KMinMaxOrdering,
    construct_ordering,
    decompose_c4_extension,
    exhaustive_search,
    interval_table,
    is_min_max_ordering,
    order_by_degrees,
    validate_k_min_max,
)
from .solver import (
    CostTable,
    Homomorphism,
    LevelAssignment,
    brute_force_minhom,
    build_network,
    format_costs,
    is_homomorphism,
    level_partitions,
    min_cut_solve,
    parse_costs,
    recover_homomorphism,
    solve_minhom,
    solve_minhom_detailed,
)
from .gadgets import (
    GADGET_KINDS,
    GadgetInstance,
    gadget_target,
    max_independent_set_size,
    reduce_to_minhom,
    verify_reduction,
)
from .classify import Classification, classify_bipartite, classify_multipartite
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BipartitionedDigraph", "Digraph", "UndirectedGraph", "arc_subdigraph",
    "converse", "find_induced_subdigraph", "format_digraph", "is_extension_of",
    "is_semicomplete_bipartite", "parse_digraph", "strong_components",
    "underlying",
    "ForbiddenWitness", "PatternCatalog", "detect_forbidden",
    "detect_long_induced_even_cycle", "pattern_catalog",
    "IntervalTable", "KMinMaxOrdering", "construct_ordering",
    "decompose_c4_extension", "exhaustive_search", "interval_table",
    "is_min_max_ordering", "order_by_degrees", "validate_k_min_max",
    "CostTable", "Homomorphism", "LevelAssignment", "brute_force_minhom",
    "build_network", "format_costs", "is_homomorphism", "level_partitions",
    "min_cut_solve", "parse_costs", "recover_homomorphism", "solve_minhom",
    "solve_minhom_detailed",
    "GADGET_KINDS", "GadgetInstance", "gadget_target",
    "max_independent_set_size", "reduce_to_minhom", "verify_reduction",
    "Classification", "classify_bipartite", "classify_multipartite",
    "errors",
]
