"""Binding numbers, fractional [a,b]-covered graphs and their ID-critical variant."""

from bindlab.binding import BindingWitness, binding_number, binding_number_pruned, woodall_bound
from bindlab.factors import (
    CoveredVerdict,
    FactorBounds,
    FractionalAssignment,
    covered_oracle,
    delta_st,
    epsilon,
    fractional_factor_exists,
    is_fractional_ab_covered,
    tee_set,
)
from bindlab.graph import (
    Graph,
    VertexSet,
    delete_vertices,
    edges_between,
    from_edge_list,
    independent_sets,
    is_independent,
    neighborhood,
)
from bindlab.graph6 import emit_graph6, parse_graph6
from bindlab.idcritical import IdCriticalVerdict, id_critical_profile, is_id_critical_covered
from bindlab.theorem import (
    Classification,
    binding_threshold,
    order_threshold,
    run_campaign,
    theorem1_threshold,
    verify_theorem2,
)

__version__ = "0.1.0"

__all__ = [
    "BindingWitness",
    "Classification",
    "CoveredVerdict",
    "FactorBounds",
    "FractionalAssignment",
    "Graph",
    "IdCriticalVerdict",
    "VertexSet",
    "binding_number",
    "binding_number_pruned",
    "binding_threshold",
    "covered_oracle",
    "delete_vertices",
    "delta_st",
    "edges_between",
    "emit_graph6",
    "epsilon",
    "fractional_factor_exists",
    "from_edge_list",
    "id_critical_profile",
    "independent_sets",
    "is_fractional_ab_covered",
    "is_id_critical_covered",
    "is_independent",
    "neighborhood",
    "order_threshold",
    "parse_graph6",
    "run_campaign",
    "tee_set",
    "theorem1_threshold",
    "verify_theorem2",
    "woodall_bound",
]
