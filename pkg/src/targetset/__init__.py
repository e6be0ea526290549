"""Solvers, oracles, and tooling for threshold-driven influence spread on
edge-weighted graphs, using exact rational arithmetic throughout."""

from .instance import (
    DIRECTED,
    UNDIRECTED,
    Edge,
    Instance,
    Rational,
    VertexSet,
    Violation,
    build_instance,
    canonical_edges,
    connected_components,
    format_rational,
    incident_weight_sum,
    induced_subinstance,
    is_connected,
    min_edge_weight,
    parse_rational,
    validate,
)
from .engine import (
    ActivationTrace,
    build_incentives,
    incentive_cost,
    is_target_set,
    is_target_vector,
    run_activation,
    run_with_incentives,
)
from .degeneracy import (
    DegeneracyOrdering,
    NotDegenerate,
    brute_degeneracy_check,
    kappa_complement_check,
    near_saturation_check,
    peel_ordering,
    slacks_along,
)
from .solvers import (
    ApproxTargetSetResult,
    SolveReport,
    approx_target_set,
    classify_and_solve,
    solve_degenerate,
    solve_min_or_full,
    solve_two_level,
    target_vector_lower_bound,
    vertex_cover_target_set,
)
from .oracles import (
    OracleResult,
    exact_min_target_set,
    exact_min_target_vector,
    exact_min_vertex_cover,
    grid_min_target_vector,
)
from .reductions import (
    ReductionReceipt,
    degenerate_to_complete,
    to_bidirected,
    tss_to_complete,
)
from .generators import GenSpec, generate
from .wtg import parse_wtg, serialize_wtg
from .errors import (
    OracleLimitError,
    PreconditionError,
    ValidationError,
    WtgParseError,
)

__all__ = [
    "ActivationTrace",
    "ApproxTargetSetResult",
    "DIRECTED",
    "DegeneracyOrdering",
    "Edge",
    "GenSpec",
    "Instance",
    "NotDegenerate",
    "OracleLimitError",
    "OracleResult",
    "PreconditionError",
    "Rational",
    "ReductionReceipt",
    "SolveReport",
    "UNDIRECTED",
    "ValidationError",
    "VertexSet",
    "Violation",
    "WtgParseError",
    "approx_target_set",
    "brute_degeneracy_check",
    "build_incentives",
    "build_instance",
    "canonical_edges",
    "classify_and_solve",
    "connected_components",
    "degenerate_to_complete",
    "exact_min_target_set",
    "exact_min_target_vector",
    "exact_min_vertex_cover",
    "format_rational",
    "generate",
    "grid_min_target_vector",
    "incentive_cost",
    "incident_weight_sum",
    "induced_subinstance",
    "is_connected",
    "is_target_set",
    "is_target_vector",
    "kappa_complement_check",
    "min_edge_weight",
    "near_saturation_check",
    "parse_rational",
    "parse_wtg",
    "peel_ordering",
    "run_activation",
    "run_with_incentives",
    "serialize_wtg",
    "slacks_along",
    "solve_degenerate",
    "solve_min_or_full",
    "solve_two_level",
    "target_vector_lower_bound",
    "to_bidirected",
    "tss_to_complete",
    "validate",
    "vertex_cover_target_set",
]
