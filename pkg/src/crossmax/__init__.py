"""Exact MAX-CUT for graphs given with a drawing that has few crossings.

The running time is exponential only in the number of crossings: each
crossing is branched on once, and every leaf is a planar instance solved
through its dual.
"""

from crossmax.crossings import (
    ConfigurationError,
    CrossingConfiguration,
    InfeasibleConfigurationError,
    NonGoodConfigurationError,
    Status,
    is_good,
    planarize,
    reduce_touches,
    validate,
)
from crossmax.graph import (
    Cut,
    GraphError,
    PFInstance,
    WeightedGraph,
    cut_value,
    is_feasible_cut,
    normalize_graph,
    pf_infeasible,
)
from crossmax.io import Instance, ParseError, parse_instance, read_instance, serialize
from crossmax.mcr import Realization, SplitPenalty, solve_via_realization, split_node, validate_realization
from crossmax.oracle import InstanceTooLargeError, brute_force_maxcut, brute_force_pf
from crossmax.planar import NotPlanarError, max_cut_planar
from crossmax.result import NEG_INF, SolveResult, SolveStats
from crossmax.solver import BigM, choose_crossing, solve, solve_pf_planar
from crossmax.split import NodeMap, Triplet, bisubdivide, crossing_split, identify, lift_cut

__version__ = "0.1.0"

__all__ = [
    "BigM",
    "ConfigurationError",
    "CrossingConfiguration",
    "Cut",
    "GraphError",
    "InfeasibleConfigurationError",
    "Instance",
    "InstanceTooLargeError",
    "NEG_INF",
    "NodeMap",
    "NonGoodConfigurationError",
    "NotPlanarError",
    "ParseError",
    "PFInstance",
    "Realization",
    "SolveResult",
    "SolveStats",
    "SplitPenalty",
    "Status",
    "Triplet",
    "WeightedGraph",
    "bisubdivide",
    "brute_force_maxcut",
    "brute_force_pf",
    "choose_crossing",
    "crossing_split",
    "cut_value",
    "identify",
    "is_feasible_cut",
    "is_good",
    "lift_cut",
    "max_cut_planar",
    "normalize_graph",
    "parse_instance",
    "pf_infeasible",
    "planarize",
    "read_instance",
    "reduce_touches",
    "serialize",
    "solve",
    "solve_pf_planar",
    "solve_via_realization",
    "split_node",
    "validate",
    "validate_realization",
]
