"""Graphs of diameter at most two.

Phase 1 glues the components of the minority-color subgraph together with
majority-color connectors (any two non-adjacent vertices share a neighbor).
Phase 2 grows the result with majority-color vertices adjacent to it until
both colors are equally represented.
"""

from __future__ import annotations

import heapq

from .classify import far_pair
from .errors import AdjacentInput, NoCommonNeighbor, NotDiameter2
from .graph import BLUE, RED, Color, ColoredGraph, Solution, solve_per_component


def common_neighbor(g: ColoredGraph, u: int, v: int) -> int:
    if g.has_edge(u, v):
        raise AdjacentInput(f"vertices {u} and {v} are adjacent")
    shared = g.adj_masks[u] & g.adj_masks[v]
    if not shared:
        raise NoCommonNeighbor(f"vertices {u} and {v} are at distance greater than 2")
    return (shared & -shared).bit_length() - 1


def _minority(g: ColoredGraph) -> Color:
    return BLUE if g.count(BLUE) <= g.count(RED) else RED


def merge_blue_components(g: ColoredGraph, minority: Color | None = None) -> list[int]:
    """All minority-color vertices plus at most (components - 1) connectors, inducing a connected subgraph.

    ``minority`` defaults to the rarer color (blue on ties).
    """
    if minority is None:
        minority = _minority(g)
    members = g.vertices_of(minority)
    parent = {v: v for v in members}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    for u in members:
        for w in g.adj[u]:
            if w in parent and g.colors[w] is minority:
                union(u, w)

    while True:
        roots: dict[int, int] = {}
        for v in members:
            r = find(v)
            if r not in roots and g.colors[v] is minority:
                roots[r] = v
        if len(roots) <= 1:
            break
        # lowest-id minority vertex of the two components holding the smallest ids
        first, second = sorted(roots.values())[:2]
        w = common_neighbor(g, first, second)
        if g.colors[w] is minority:
            raise NoCommonNeighbor(
                f"common neighbor {w} of {first} and {second} has the minority color"
            )
        if w not in parent:
            parent[w] = w
            members.append(w)
            for x in g.adj[w]:
                if x in parent:
                    union(w, x)
        else:
            union(w, first)
            union(w, second)
    return sorted(members)


def _solve_connected(g: ColoredGraph) -> Solution:
    far = far_pair(g)
    if far is not None:
        raise NotDiameter2(f"vertices {far[0]} and {far[1]} are at distance greater than 2", pair=far)
    minority = _minority(g)
    want = g.count(minority)
    if want == 0:
        return Solution.empty()
    chosen = set(merge_blue_components(g, minority))
    have = len(chosen) - want
    assert have <= want - 1, "phase 1 used more connectors than components allow"
    frontier = [w for v in chosen for w in g.adj[v] if w not in chosen]
    heapq.heapify(frontier)
    while have < want:
        while frontier and frontier[0] in chosen:
            heapq.heappop(frontier)
        if not frontier:
            raise AssertionError("no vertex adjacent to the partial solution; graph is disconnected")
        w = heapq.heappop(frontier)
        assert g.colors[w] is not minority
        chosen.add(w)
        have += 1
        for x in g.adj[w]:
            if x not in chosen:
                heapq.heappush(frontier, x)
    return Solution.of(g, chosen)


def solve_diam2(g: ColoredGraph) -> Solution:
    """Balanced connected subgraph with ``min{b, r}`` vertices of each color.

    Disconnected inputs are solved per component, each of which must have
    diameter at most two.
    """
    return solve_per_component(g, _solve_connected)
