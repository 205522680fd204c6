"""Entanglement of directed-graph qubit states.

Two independent routes to the same numbers: exact state-vector simulation of
graph states built from diagonal edge operators, and closed forms that depend
on nothing but the graph's degree distribution.  The package keeps both so
every closed form can be checked against the brute-force oracle.
"""

from .density import (
    DensityMatrix,
    eigenvalues_2x2,
    entropy_at_half_p,
    hs_distance,
    hs_distance_sq_analytic,
    maximally_mixed,
    pair_entropy_analytic,
    partial_trace,
    reduced_eigenvalues_analytic,
    von_neumann_entropy,
)
from .entanglement import (
    EdReport,
    ed_binary_tree,
    ed_binary_tree_limit,
    ed_bridged_cycles,
    ed_closed_form,
    ed_closed_general,
    ed_closed_report,
    ed_ffnn,
    ed_ffnn_output_self_exponent,
    ed_general_report,
    ed_numeric,
    ed_young_fibonacci,
    ed_young_fibonacci_limit,
    interaction_expectation,
    pauli_vector_closed,
    two_qubit_ed_analytic,
)
from .graphs import (
    DegreeDistribution,
    DirectedGraph,
    TopologySpec,
    build_topology,
    degree,
    degree_distribution,
    flip_edge,
    from_edge_list,
    from_json,
    gen_bridged_cycles,
    gen_ffnn,
    gen_full_binary_tree,
    gen_young_fibonacci,
    in_neighbors,
    load_graph,
    out_neighbors,
    permute_vertices,
    random_graph,
    save_graph,
    to_json,
)
from .statevector import (
    DEFAULT_MAX_QUBITS,
    InitialQubit,
    InteractionParams,
    PureState,
    apply_edge_phase,
    build_graph_state,
    pauli_expectations,
    product_state,
)
from .verify import VerificationReport, ffnn_variant_report, run_verification

__version__ = "0.1.0"
