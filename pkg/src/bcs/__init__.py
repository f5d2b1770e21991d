"""Maximum balanced connected subgraphs of red/blue graphs.

Exact polynomial solvers for trees, split graphs, properly colored bipartite
graphs and diameter-2 graphs, an exhaustive oracle for small instances, and
instance generators for the NP-hard source problems.
"""

from .bipartite import solve_bipartite_proper
from .classify import ClassReport, SplitPartition, classify
from .diam2 import common_neighbor, merge_blue_components, solve_diam2
from .dispatch import choose_method, solve_auto
from .errors import BcsError
from .graph import BLUE, RED, Color, ColoredGraph, Solution, Verdict, components, is_connected, verify_solution
from .io import format_graph, format_solution, parse_graph, parse_solution
from .oracle import OracleConfig, oracle_balanced_path, oracle_bcs, oracle_bcs_containing, oracle_ham_path
from .split import solve_split
from .tree import PairSet, solve_tree

__all__ = [
    "BLUE",
    "RED",
    "BcsError",
    "ClassReport",
    "Color",
    "ColoredGraph",
    "OracleConfig",
    "PairSet",
    "Solution",
    "SplitPartition",
    "Verdict",
    "choose_method",
    "classify",
    "common_neighbor",
    "components",
    "format_graph",
    "format_solution",
    "is_connected",
    "merge_blue_components",
    "oracle_balanced_path",
    "oracle_bcs",
    "oracle_bcs_containing",
    "oracle_ham_path",
    "parse_graph",
    "parse_solution",
    "solve_auto",
    "solve_bipartite_proper",
    "solve_diam2",
    "solve_split",
    "solve_tree",
    "verify_solution",
]
