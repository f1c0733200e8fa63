"""Fractal cubic networks: construction, domination and resolving parameters.

The package builds fcn(l) and rooted products, verifies vertex sets against
twelve set properties, minimises each parameter exactly or under a budget,
constructs the claimed certificate families, and adjudicates the closed-form
and inequality claims against the solver.
"""

from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    TwinClass,
    TwinPartition,
    all_pairs_distances,
    build_graph,
    degree_sequence,
    graph_from_label_edges,
    induced_subgraph,
    is_connected,
    twin_partition,
)
from .generators import (
    complete,
    cycle,
    fcn,
    fcn_prefix_bijection,
    fcn_root_suffix,
    hypercube,
    path,
    relabeled_equal,
    rooted_product,
)
from .verify import (
    Certificate,
    ParameterKind,
    certificate_indices,
    check,
    codes,
    explain_violation,
    is_2_dominating,
    is_dominating,
    is_double_dominating,
    is_independent,
    is_resolving,
    is_total_dominating,
)
from .serialize import (
    certificate_from_json,
    certificate_to_json,
    graph_digest,
    graph_from_edges,
    graph_from_json,
    graph_to_dot,
    graph_to_edges,
    graph_to_json,
    make_certificate,
)
from .solve import (
    Budget,
    SolverResult,
    SolverStatus,
    dim_lower_bound_twins,
    is_quasi_double_pair,
    min_param,
    naive_min_param,
    quasi_double_domination_number,
)
from .constructions import construct, formula_value
from .harness import (
    BOUND_CLAIMS,
    FCN_CLAIMS,
    PRODUCT_CLAIMS,
    Verdict,
    check_bound_claim,
    check_extremes_example,
    check_fcn_claim,
    check_product_claim,
    check_twin_bound_claim,
    run_all_claims,
)

__version__ = "0.1.0"
