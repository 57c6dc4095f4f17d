"""List coloring and list H-coloring on convex bipartite graphs."""

from .colordp import VARIANTS, solve_color_dp, solve_hcol_usedset, trace_tables
from .frontier import solve_frontier, state_census
from .gen import GENERATOR_VERSION, gen_biconvex_instance, gen_convex_instance, gen_target
from .model import (BipartiteGraph, Coloring, ConvexInstance, InvalidInstanceError, TargetGraph,
                    YVertex, complete_target, validate_instance, verify_coloring)
from .oracle import OracleRefusal, brute_force_instance, brute_force_solve

__all__ = [
    "VARIANTS", "solve_color_dp", "solve_hcol_usedset", "trace_tables",
    "solve_frontier", "state_census",
    "GENERATOR_VERSION", "gen_biconvex_instance", "gen_convex_instance", "gen_target",
    "BipartiteGraph", "Coloring", "ConvexInstance", "InvalidInstanceError", "TargetGraph",
    "YVertex", "complete_target", "validate_instance", "verify_coloring",
    "OracleRefusal", "brute_force_instance", "brute_force_solve",
]
