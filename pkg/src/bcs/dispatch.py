"""Pick the strongest applicable solver for an instance.

Priority: properly colored bipartite, tree, split, diameter 2, then the
exhaustive oracle when the instance fits under its cap.
"""

from __future__ import annotations

from .bipartite import solve_bipartite_proper
from .classify import ClassReport, classify
from .diam2 import solve_diam2
from .errors import Unsupported
from .graph import ColoredGraph, Solution
from .oracle import DEFAULT, OracleConfig, oracle_bcs
from .split import solve_split
from .tree import solve_tree

METHODS = ("bipartite", "tree", "split", "diam2", "oracle")


def choose_method(report: ClassReport, n: int, cfg: OracleConfig = DEFAULT) -> str | None:
    if report.is_proper_bipartite:
        return "bipartite"
    if report.is_tree:
        return "tree"
    if report.is_split:
        return "split"
    if report.diameter_le_2:
        return "diam2"
    if n <= cfg.max_n:
        return "oracle"
    return None


def solve_auto(g: ColoredGraph, cfg: OracleConfig = DEFAULT) -> tuple[Solution, str]:
    report = classify(g)
    method = choose_method(report, g.n, cfg)
    if method is None:
        raise Unsupported(
            f"no polynomial solver applies and n={g.n} exceeds the oracle cap {cfg.max_n}",
            report=report,
        )
    if method == "bipartite":
        return solve_bipartite_proper(g), method
    if method == "tree":
        return solve_tree(g), method
    if method == "split":
        return solve_split(g), method
    if method == "diam2":
        return solve_diam2(g), method
    return oracle_bcs(g, cfg), method
