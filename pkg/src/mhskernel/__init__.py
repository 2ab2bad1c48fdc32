"""Kernelization toolkit for Multiple Hitting Set.

Data reduction rules (full edge, superedge, demand pushing, multiple
domination, pushed-demand lower bound) behind two provably equivalent
engines, the incidence-graph parameters that bound their output size and
round count, and an exact branch-and-bound solver for ground truth.
"""

from .bitmatrix import IncidenceMatrix, incidence_matrix
from .generate import generate_random, ingest_response_matrix
from .graphparams import (
    Graph,
    IncidenceGraph,
    dilworth_number,
    incidence_graph,
    kernel_bound,
    matching_number,
    neighborhood_diversity,
    vinical_leq,
)
from .instance import (
    FeasibilityReport,
    Hypergraph,
    InstanceError,
    edges_of,
    instance_size,
    parse_instance,
    serialize_instance,
    validate_feasibility,
)
from .parallel import par_kernelize, par_reduce_edges, par_reduce_vertices
from .pipeline import PipelineSpec, compute_stats, run_pipeline
from .report import KernelReport, KernelRun
from .rules import (
    ActiveInstance,
    RuleOutcome,
    apply_fe_exhaustively,
    build_pushed_subinstance,
    dominators,
    exact_oracle,
    lp_rule_applicable,
    md_applicable,
    pushed_max_oracle,
    supersedes,
)
from .sequential import ReductionState, init_state, seq_kernelize, seq_reduce_edges, seq_reduce_vertices
from .solver import Solution, SolveStatus, solve_opt, verify_solution

__all__ = [
    "ActiveInstance",
    "FeasibilityReport",
    "Graph",
    "Hypergraph",
    "IncidenceGraph",
    "IncidenceMatrix",
    "InstanceError",
    "KernelReport",
    "KernelRun",
    "PipelineSpec",
    "ReductionState",
    "RuleOutcome",
    "Solution",
    "SolveStatus",
    "apply_fe_exhaustively",
    "build_pushed_subinstance",
    "compute_stats",
    "dilworth_number",
    "dominators",
    "edges_of",
    "exact_oracle",
    "generate_random",
    "incidence_graph",
    "incidence_matrix",
    "ingest_response_matrix",
    "init_state",
    "instance_size",
    "kernel_bound",
    "lp_rule_applicable",
    "matching_number",
    "md_applicable",
    "neighborhood_diversity",
    "par_kernelize",
    "par_reduce_edges",
    "par_reduce_vertices",
    "parse_instance",
    "pushed_max_oracle",
    "run_pipeline",
    "seq_kernelize",
    "seq_reduce_edges",
    "seq_reduce_vertices",
    "serialize_instance",
    "solve_opt",
    "supersedes",
    "validate_feasibility",
    "verify_solution",
    "vinical_leq",
]

__version__ = "0.1.0"
