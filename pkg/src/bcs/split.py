"""Balanced connected subgraphs of size ``2 min{b, r}`` on split graphs."""

from __future__ import annotations

from .classify import SplitPartition, find_split_partition
from .errors import NotSplit
from .graph import BLUE, RED, Color, ColoredGraph, Solution, solve_per_component


def split_partition(g: ColoredGraph) -> SplitPartition:
    p = find_split_partition(g)
    if p is None:
        raise NotSplit("degree sequence fails the split-graph test")
    return p


def _kept_edges(g: ColoredGraph, p: SplitPartition) -> dict[int, int]:
    """S vertex -> its lowest-id clique neighbor of the opposite color, where one exists."""
    in_k = set(p.K)
    kept = {}
    for u in p.S:
        for w in g.adj[u]:
            if w in in_k and g.colors[w] is not g.colors[u]:
                kept[u] = w
                break
    return kept


def prune_edges(g: ColoredGraph, p: SplitPartition) -> ColoredGraph:
    """Keep a single edge to the opposite color in the clique for every S vertex that has one.

    The kept edge goes to the lowest-id such neighbor; S vertices without an
    opposite-color clique neighbor, and all clique edges, are left untouched.
    """
    kept = _kept_edges(g, p)
    drop = {(min(u, w), max(u, w)) for u, keep in kept.items() for w in g.adj[u] if w != keep}
    return g.with_edges(e for e in g.edges if e not in drop)


def _solve_connected(g: ColoredGraph) -> Solution:
    p = split_partition(g)
    n_red, n_blue = g.count(RED), g.count(BLUE)
    if n_red == n_blue:
        return Solution.of(g, range(g.n))
    minority: Color = BLUE if n_blue < n_red else RED
    majority = minority.other()
    k = abs(n_red - n_blue)

    s_maj = p.by_color(g, "S", majority)
    if len(s_maj) >= k:
        dropped = set(s_maj[:k])
        return Solution.of(g, (v for v in range(g.n) if v not in dropped))

    # after pruning, an S vertex of the minority color keeps exactly one edge
    # into the majority side of the clique iff it had any
    kept = _kept_edges(g, p)
    s_min = p.by_color(g, "S", minority)
    k_min = p.by_color(g, "K", minority)
    k_maj = p.by_color(g, "K", majority)
    tied = [u for u in s_min if u in kept]
    forced = {kept[u] for u in tied}
    quota = len(s_min) + len(k_min)
    assert len(forced) <= len(tied) <= quota <= len(k_maj), "split case-2 counting bound violated"
    x = sorted(forced)
    for w in k_maj:
        if len(x) == quota:
            break
        if w not in forced:
            x.append(w)
    return Solution.of(g, s_min + k_min + x)


def solve_split(g: ColoredGraph) -> Solution:
    """Balanced connected subgraph with ``min{b, r}`` vertices of each color.

    Disconnected inputs are solved per component.
    """
    if find_split_partition(g) is None:
        raise NotSplit("degree sequence fails the split-graph test")
    return solve_per_component(g, _solve_connected)
