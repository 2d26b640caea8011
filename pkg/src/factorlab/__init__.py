"""factorlab: exact 2-factors, Tutte barriers, and edge-chromatic criticality.

The package decides 2-factor existence constructively (gadget plus
blossom matching) and by exhaustive barrier search, classifies the
component structure around barriers, builds the auxiliary bipartite
graphs used in matching arguments, computes exact chromatic indices and
Delta-criticality, audits the structural lemmas on concrete graphs, and
scans all small connected graphs for counterexamples.
"""

from .coloring import (
    EdgeColoring,
    GraphClass,
    chromatic_index,
    classify,
    exact_edge_coloring,
    is_critical,
    is_delta_critical,
    vizing_color,
)
from .factors import (
    AuxBipartite,
    Barrier,
    Component,
    ComponentClassification,
    InfeasibleGadget,
    TwoFactor,
    build_factor_gadget,
    build_split_reduction,
    build_t_incidence,
    classify_components,
    deficiency_delta,
    degree_deficiency,
    find_barrier,
    find_two_factor,
    minimum_barrier,
    to_dot,
)
from .graphs import (
    CapabilityError,
    Graph,
    Graph6Error,
    bits,
    canonical_form,
    canonical_graph,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    independence_number,
    is_connected,
    mask_of,
    maximal_independent_sets,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    to_graph6,
)
from .matching import (
    BipartiteGraph,
    Matching,
    degree_dominant_matching,
    degree_one_reduction,
    hall_violator,
    max_bipartite_matching,
    max_matching_general,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
