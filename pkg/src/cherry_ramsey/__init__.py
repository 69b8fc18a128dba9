"""Exact tooling for Ramsey and Gallai-Ramsey numbers of cherry unions.

A cherry is the path on three vertices; the library builds the extremal
colorings that certify lower bounds, detects monochromatic targets exactly,
decomposes rainbow-triangle-free colorings, evaluates the closed-form values,
and settles small cases by exhaustive symmetry-pruned search.
"""

from .construct import (
    InvalidArity,
    InvalidOrdering,
    cycle_vs_stars_construction,
    gallai_nested_construction,
    k10_six_coloring,
    matching_base_construction,
    one_factorization,
)
from .core import (
    ColorClassGraph,
    ColoredComplete,
    IncompleteColoring,
    ParseError,
    TargetKind,
    TargetSpec,
    Witness,
    color_class,
    from_edge_colors,
    graph_from_edges,
    new_coloring,
    parse,
    parse_target,
    parse_target_list,
    serialize,
    witness_is_valid,
)
from .detect import (
    PackingResult,
    contains_target,
    has_cycle_length,
    is_matching,
    longest_path,
    max_matching,
    max_p3_packing,
    max_star_packing,
)
from .formulas import (
    FormulaResult,
    cockayne_lorimer,
    debiasio_pm,
    faudree_schelp_paths,
    gr_cherries,
    irving,
    lb_cherries,
    r_cherries_dominant,
    r_cycle_vs_stars,
    r_k_2p3,
    r_k_t_cherries_rest_p3,
    scobee,
)
from .gallai import (
    BoundNotMet,
    GallaiPartition,
    NotGallai,
    OutcomeKind,
    ProperOutcome,
    TheoremViolation,
    TooSmall,
    WrongColorCount,
    find_rainbow_triangle,
    gallai_extract,
    gallai_partition,
    is_gallai,
    mono_star_or_proper_cycle,
    outcome_is_valid,
    partition_is_valid,
    random_gallai,
)
from .search import (
    InconclusiveSearch,
    RamseyInstance,
    SearchOutcome,
    SearchStatus,
    compute_ramsey,
    exists_good_coloring,
    validate_witness,
)

__all__ = [
    "ColorClassGraph",
    "ColoredComplete",
    "IncompleteColoring",
    "ParseError",
    "TargetKind",
    "TargetSpec",
    "Witness",
    "color_class",
    "from_edge_colors",
    "graph_from_edges",
    "new_coloring",
    "parse",
    "parse_target",
    "parse_target_list",
    "serialize",
    "witness_is_valid",
    "PackingResult",
    "contains_target",
    "has_cycle_length",
    "is_matching",
    "longest_path",
    "max_matching",
    "max_p3_packing",
    "max_star_packing",
    "InvalidArity",
    "InvalidOrdering",
    "cycle_vs_stars_construction",
    "gallai_nested_construction",
    "k10_six_coloring",
    "matching_base_construction",
    "one_factorization",
    "BoundNotMet",
    "GallaiPartition",
    "NotGallai",
    "OutcomeKind",
    "ProperOutcome",
    "TheoremViolation",
    "TooSmall",
    "WrongColorCount",
    "find_rainbow_triangle",
    "gallai_extract",
    "gallai_partition",
    "is_gallai",
    "mono_star_or_proper_cycle",
    "outcome_is_valid",
    "partition_is_valid",
    "random_gallai",
    "FormulaResult",
    "cockayne_lorimer",
    "debiasio_pm",
    "faudree_schelp_paths",
    "gr_cherries",
    "irving",
    "lb_cherries",
    "r_cherries_dominant",
    "r_cycle_vs_stars",
    "r_k_2p3",
    "r_k_t_cherries_rest_p3",
    "scobee",
    "InconclusiveSearch",
    "RamseyInstance",
    "SearchOutcome",
    "SearchStatus",
    "compute_ramsey",
    "exists_good_coloring",
    "validate_witness",
]
