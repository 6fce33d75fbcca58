"""Exact tools for 2D generic rigidity: ranks, stresses, reductions, bounds."""

from .bounds import (
    BoundReport,
    batch_verify,
    oracle_agreement_sweep,
    reports_to_csv,
    reports_to_jsonl,
    stress_cap4,
    stress_cap5,
    sweep_random_regular,
    verify_complete,
    verify_cubic,
    verify_lemma_bound,
    verify_theorem1,
    verify_theorem2,
)
from .graph import (
    CutReport,
    Edge,
    EdgeListError,
    GenerationError,
    Graph,
    connected_components,
    cut_analysis,
    degree_sum_defect,
    find_bridges,
    format_edge_list,
    generate_clique_chain,
    generate_complete,
    generate_random_regular,
    induced_subgraph,
    is_connected,
    nontrivial_component_count,
    parse_edge_list,
    read_edge_list,
    to_dot,
)
from .pebble import (
    OracleMismatchError,
    PebbleState,
    certified_rank,
    certified_stress,
    pebble_basis,
    pebble_independent,
    pebble_rank,
    run_pebble_game,
)
from .reductions import (
    CertificationError,
    ReductionStep,
    ReductionTrace,
    SplitGateError,
    StressRelation,
    apply_step,
    certify_stress_bound,
    delete_vertex,
    disconnect_split,
    inverse_one_extension,
    inverse_one_extension_deg4,
    peel_closure,
    remove_bridge,
    remove_edge,
    remove_two_cut,
    simplify,
)
from .rigidity import (
    DEFAULT_PRIME,
    DomainError,
    Realization,
    RigidityMatrix,
    StressBasis,
    build_rigidity_matrix,
    generic_rank,
    h1_dimension,
    is_general_position,
    matrix_rank,
    restriction_containment,
    sample_generic_realization,
    stress_basis,
    stress_count,
)

__version__ = "0.1.0"
