"""Exact desk-scale laboratory for hereditary graph classes defined by
induced cycles: classification, the levelling coloring with its doubly
exponential palette guarantee, perfect chromatic numbers, niceness, and
search harnesses for antichains and coloring conjectures."""

from .catalog import canonical_code, canonical_form, enumerate_graphs, full_catalog
from .classlab import (
    AntichainReport,
    ChiOmegaSqReport,
    EHReport,
    F4Report,
    ForbiddenSequenceRealization,
    SlackReport,
    check_bipartition_conjecture,
    check_chi_omega_sq,
    class_membership,
    corpus,
    eh_exponent,
    enumerate_connected_4_regular,
    f4_search,
    gyarfas_slack,
    is_planar,
    max_anticomplete_odd_holes,
    realize_forbidden_sequence,
    verify_antichain,
)
from .embed import is_induced_subgraph
from .errors import (
    DisconnectedGraph,
    Graph6Error,
    HoleforgeError,
    InternalInvariantError,
    LongHoleDetected,
    NoBisimplicialVertex,
    NotTriangleFree,
    SolverTimeout,
    VertexCapExceeded,
)
from .graph6 import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graphs import (
    Graph,
    antihole,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    grotzsch,
    induced,
    line_graph,
    mycielskian,
    path,
    scott_seymour,
    substitute,
    tree_T,
)
from .holes import (
    ClassFlags,
    HoleReport,
    bisimplicial_elimination_coloring,
    classify,
    enumerate_induced_cycles,
    find_bisimplicial,
    has_long_hole,
    is_chordal,
    is_chordal_bipartite,
    is_perfect,
    is_weakly_chordal,
    parity_class,
)
from .invariants import (
    Coloring,
    InvariantReport,
    analyze,
    chromatic_number,
    clique_cover_number,
    clique_number,
    greedy_coloring,
    is_k_colorable,
    is_proper,
    stability_number,
)
from .levelling import (
    ColoringReport,
    Levelling,
    PrunedLevelling,
    build_levelling,
    color_long_hole_free,
    coloring_report,
    palette_bound,
    prune_for_component,
)
from .perfection import (
    NiceReport,
    PerfectPartition,
    chi_p_bounds,
    chi_p_of_line_complete,
    chi_p_triangle_free,
    is_nice,
    perfect_chromatic_number,
)

__version__ = "0.1.0"

__all__ = [
    "AntichainReport",
    "ChiOmegaSqReport",
    "ClassFlags",
    "Coloring",
    "ColoringReport",
    "DisconnectedGraph",
    "EHReport",
    "F4Report",
    "ForbiddenSequenceRealization",
    "Graph",
    "Graph6Error",
    "HoleReport",
    "HoleforgeError",
    "InternalInvariantError",
    "InvariantReport",
    "Levelling",
    "LongHoleDetected",
    "NiceReport",
    "NoBisimplicialVertex",
    "NotTriangleFree",
    "PerfectPartition",
    "PrunedLevelling",
    "SlackReport",
    "SolverTimeout",
    "VertexCapExceeded",
    "analyze",
    "antihole",
    "bisimplicial_elimination_coloring",
    "build_levelling",
    "canonical_code",
    "canonical_form",
    "check_bipartition_conjecture",
    "check_chi_omega_sq",
    "chi_p_bounds",
    "chi_p_of_line_complete",
    "chi_p_triangle_free",
    "chromatic_number",
    "class_membership",
    "classify",
    "clique_cover_number",
    "clique_number",
    "color_long_hole_free",
    "coloring_report",
    "complement",
    "complete",
    "complete_bipartite",
    "corpus",
    "cycle",
    "disjoint_union",
    "eh_exponent",
    "empty",
    "enumerate_connected_4_regular",
    "enumerate_graphs",
    "enumerate_induced_cycles",
    "f4_search",
    "find_bisimplicial",
    "full_catalog",
    "greedy_coloring",
    "grotzsch",
    "gyarfas_slack",
    "has_long_hole",
    "induced",
    "is_chordal",
    "is_chordal_bipartite",
    "is_induced_subgraph",
    "is_k_colorable",
    "is_nice",
    "is_perfect",
    "is_planar",
    "is_proper",
    "is_weakly_chordal",
    "line_graph",
    "max_anticomplete_odd_holes",
    "mycielskian",
    "palette_bound",
    "parity_class",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "perfect_chromatic_number",
    "prune_for_component",
    "realize_forbidden_sequence",
    "scott_seymour",
    "stability_number",
    "substitute",
    "tree_T",
    "verify_antichain",
    "write_edge_list",
    "write_graph6",
]
