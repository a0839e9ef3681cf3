"""Edge-coloring criticality toolkit.

Exact chromatic-index decisions, Kempe-chain recoloring machinery,
adjacency-lemma oracles, and desk-scale verification sweeps over vertex
splits of regular class-1 graphs.
"""

from .coloring import (
    ColoringError,
    ImproperColoringError,
    KempeChain,
    LinkageError,
    PartialEdgeColoring,
    are_linked,
    chain_ray,
    color_uncolored,
    coloring_from_text,
    elementary_violation,
    is_elementary,
    kempe_chain,
    kempe_swap,
    parity_census,
    ray_swap,
    recolor_edge,
    slide_uncolored,
    subchain_swap,
)
from .enumeration import enumerate_regular_graphs, enumerate_small_graphs
from .graph6 import (
    Graph6Error,
    emit_graph6,
    emit_graph6_lines,
    parse_graph6,
    parse_graph6_lines,
)
from .graphs import (
    Edge,
    Graph,
    GraphError,
    SplitSpec,
    automorphisms,
    canonical_graph,
    canonical_mask,
    complete,
    complete_bipartite,
    complete_minus_matching,
    cube,
    cycle,
    distance,
    graph_from_mask,
    is_overfull,
    make_graph,
    petersen,
    petersen_minus_vertex,
    prism,
    split_spec,
    validate_split,
    vertex_split,
)
from .lemmas import (
    build_contradiction_script,
    check_deficiency_pair,
    check_kierstead,
    check_kite_chain_route,
    check_multifan,
    check_parity,
    check_short_kite,
    check_single_subdelta,
    check_vizing_adjacency,
    lemma_battery,
    swap_rims_script,
)
from .recolor import (
    ColorEdge,
    RecolorEdge,
    ScriptResult,
    ScriptStepError,
    SlideUncolored,
    SwapChainAt,
    SwapRay,
    SwapSubchain,
    apply_step,
    execute_script,
)
from .records import (
    RecordError,
    VerificationRecord,
    read_records,
    record_from_json_line,
    tally_verdicts,
    write_records,
)
from .solver import (
    SearchBudgetExceeded,
    chromatic_index,
    classify,
    classify_cached,
    critical_edge_report,
    enumerate_colorings,
    find_coloring,
    find_delta_coloring,
    is_critical_edge,
    vizing_color,
)
from .structures import (
    FullDeficiencyPair,
    KiersteadPath,
    Multifan,
    ShortKite,
    build_maximal_multifan,
    enumerate_kierstead_paths,
    find_full_deficiency_pairs,
    find_short_kites,
    is_kierstead_path,
    is_multifan,
    kierstead_violation,
    kite_in_graph,
    kite_violation,
    multifan_violation,
)
from .verifier import (
    SplitInstance,
    SweepConfig,
    check_split_instance,
    inherit_split_coloring,
    plan_instances,
    reproduce_nonelementary_path,
    run_sweep,
    sweep_conjecture_range,
    verify_theorem1,
)

__version__ = "0.1.0"
