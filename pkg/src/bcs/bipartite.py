"""Properly 2-colored graphs: spanning tree, then peel leaves of the excess color."""

from __future__ import annotations

import heapq

from .classify import monochromatic_edge
from .errors import NoMajorityLeaf, NotConnected, NotProperColoring
from .graph import BLUE, RED, Color, ColoredGraph, Solution, components, solve_per_component
from .tree import RootedTree


def spanning_tree(g: ColoredGraph) -> RootedTree:
    """BFS spanning tree from vertex 0."""
    if g.n and len(components(g)) != 1:
        raise NotConnected("spanning tree needs a connected graph")
    parent = [-1] * g.n
    edges = []
    if g.n:
        parent[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if parent[w] == -1:
                        parent[w] = u
                        edges.append((u, w))
                        nxt.append(w)
            frontier = nxt
    return RootedTree.from_graph(g.with_edges(edges), 0)


def find_majority_leaf(t: ColoredGraph, majority: Color) -> int:
    """Lowest-id leaf of color ``majority``; a lone vertex counts as a leaf."""
    for v in range(t.n):
        if t.degree(v) <= 1 and t.colors[v] is majority:
            return v
    raise NoMajorityLeaf(f"no {majority.name.lower()} leaf; tree is not properly colored")


def _peel(g: ColoredGraph) -> Solution:
    tree = spanning_tree(g).graph
    n_red, n_blue = g.count(RED), g.count(BLUE)
    if n_red == n_blue:
        return Solution.of(g, range(g.n))
    majority = RED if n_red > n_blue else BLUE
    deg = [tree.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    heap = [v for v in range(g.n) if deg[v] <= 1 and g.colors[v] is majority]
    heapq.heapify(heap)
    for _ in range(abs(n_red - n_blue)):
        while heap and not alive[heap[0]]:
            heapq.heappop(heap)
        if not heap:
            raise NoMajorityLeaf("peeling ran out of majority-color leaves")
        v = heapq.heappop(heap)
        assert deg[v] <= 1, "removing a non-leaf would disconnect the tree"
        alive[v] = False
        for w in tree.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1 and g.colors[w] is majority:
                    heapq.heappush(heap, w)
    return Solution.of(g, (v for v in range(g.n) if alive[v]))


def solve_bipartite_proper(g: ColoredGraph) -> Solution:
    """Balanced connected subgraph with ``min{b, r}`` vertices of each color.

    Disconnected inputs are solved per component.
    """
    bad = monochromatic_edge(g)
    if bad is not None:
        u, v = bad
        raise NotProperColoring(
            f"edge {u} {v} joins two {g.colors[u].name.lower()} vertices", edge=bad
        )
    return solve_per_component(g, _peel)
