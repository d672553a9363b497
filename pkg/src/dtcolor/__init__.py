"""Exact computation lab for distinguishing proper total colorings of small graphs."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    Graph6Error,
    canonical_graph6,
    closed_twin_pairs,
    complement,
    degree_stats,
    enumerate_connected,
    enumerate_graphs,
    erdos_bipartition,
    family,
    hamilton_path,
    is_connected,
    is_in_f3s,
    min_vertex_cover,
    parse_graph6,
    spanning_tree,
    to_graph6,
)
from .colorings import (
    ColorSignature,
    ConstraintSet,
    PRESETS,
    TotalColoring,
    Verdict,
    color_signature,
    constraint_set,
    is_proper_total,
    preset,
    relabel_colors,
    satisfies,
)
from .solver import (
    SearchBudget,
    SolveResult,
    chromatic_number,
    feasible_at,
    lower_bound,
    structural_feasibility,
)
from .naive import naive_chromatic_number, naive_values
from .bounds import (
    BoundCheck,
    ConjectureReport,
    SolveCache,
    conjecture_sweep,
    planarity_and_girth_gate,
    run_bound_suite,
    subgraph_monotonicity_scan,
)
from .constructions import (
    ConstructionError,
    ConstructionReport,
    all_distinct_coloring,
    bipartite_lift,
    compose_edge_vertex,
    cover_composition,
    extend_add_edge,
    extend_add_leaf,
    extend_add_leaves,
)
