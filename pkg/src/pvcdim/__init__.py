"""Partial VC dimension toolkit: exact solvers, certified approximations,
planar approximation schemes, and hardness-construction generators."""

from .approx import (
    ApproxResult,
    ShatterCertificate,
    approx_max_partial_vc,
    approx_max_vc_dimension,
    approx_via_double_hitting,
    double_hit_count,
    extract_shattered,
    greedy_classes,
    greedy_partial_double_hitting,
    greedy_vertex_order,
    sauer_threshold,
    upper_bound_classes,
)
from .core import (
    CapacityError,
    Graph,
    Hypergraph,
    InputError,
    TraceProfile,
    build_hypergraph,
    class_count,
    dual,
    is_shattered,
    is_twin_free,
    max_degree,
    neighborhood_hypergraph,
    remove_twins,
    trace_profile,
    vertices_of,
)
from .exact import (
    DEFAULT_CEILING,
    SolveResult,
    min_distinguishing_transversal,
    solve_max_partial_vc,
    solve_partial_vc_decision,
    vc_dimension,
)
from .planar import (
    ComponentTable,
    LeveledPlanarGraph,
    baker_max_partial_vc,
    baker_min_distinguishing,
    component_exact_solver,
    compute_levels,
    knapsack_combine,
    lambda_for_max,
    lambda_for_min,
)
from .reductions import (
    ReductionCertificate,
    VerificationReport,
    clique_to_vcdim,
    is_to_disting_transversal,
    max_partial_vertex_cover,
    mpvc_to_mpvcd,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
