"""Red/blue colored graphs, solutions and the solution verifier."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class Color(enum.IntEnum):
    RED = 0
    BLUE = 1

    @property
    def token(self) -> str:
        return "R" if self is Color.RED else "B"

    @classmethod
    def from_token(cls, token: str) -> "Color":
        if token == "R":
            return cls.RED
        if token == "B":
            return cls.BLUE
        raise ValueError(f"unknown color token {token!r}")

    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


RED = Color.RED
BLUE = Color.BLUE


class ColoredGraph:
    """Undirected simple graph on vertices ``0..n-1`` with one color per vertex.

    Edges are stored as ``(u, v)`` pairs with ``u < v``. Instances are treated
    as immutable; derived structures (adjacency lists, bitmasks) are cached.
    """

    def __init__(self, colors: Sequence[Color], edges: Iterable[tuple[int, int]] = ()) -> None:
        self.colors: tuple[Color, ...] = tuple(map(Color, colors))
        n = len(self.colors)
        if not isinstance(edges, (list, tuple, np.ndarray)):
            edges = list(edges)
        arr = np.array(edges, dtype=np.int64).reshape(-1, 2)
        u, v = arr[:, 0], arr[:, 1]
        loops = np.nonzero(u == v)[0]
        if loops.size:
            raise ValueError(f"self-loop at vertex {int(u[loops[0]])}")
        bad = np.nonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))[0]
        if bad.size:
            i = int(bad[0])
            raise ValueError(f"edge ({int(u[i])}, {int(v[i])}) has an endpoint out of range 0..{n - 1}")
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        keys = lo * max(n, 1) + hi
        order = np.argsort(keys, kind="stable")
        dup = np.nonzero(keys[order][1:] == keys[order][:-1])[0]
        if dup.size:
            i = int(order[dup[0] + 1])
            raise ValueError(f"duplicate edge {(int(lo[i]), int(hi[i]))}")
        self._ends = (lo.tolist(), hi.tolist())
        # adjacency: sort both directions by (source, target) and cut per source
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        by = np.lexsort((dst, src))
        targets = dst[by].tolist()
        ends = np.cumsum(np.bincount(src, minlength=n)).tolist()
        starts = [0] + ends[:-1]
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(targets[a:b]) for a, b in zip(starts, ends)
        )

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def m(self) -> int:
        return len(self._ends[0])

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edge set as ``(u, v)`` pairs with ``u < v``."""
        return frozenset(zip(*self._ends))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.colors == other.colors and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.colors, self.edges))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, red={self.count(RED)}, blue={self.count(BLUE)})"

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def count(self, color: Color) -> int:
        return sum(1 for c in self.colors if c is color)

    def vertices_of(self, color: Color) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c is color]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(zip(*self._ends))

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an integer bitset."""
        masks = []
        for nbrs in self.adj:
            m = 0
            for w in nbrs:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    @cached_property
    def color_masks(self) -> tuple[int, int]:
        red = blue = 0
        for v, c in enumerate(self.colors):
            if c is RED:
                red |= 1 << v
            else:
                blue |= 1 << v
        return red, blue

    def induced(self, vertices: Sequence[int]) -> tuple["ColoredGraph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` in ascending original order.

        Returns the subgraph and the list mapping new ids to original ids.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[w])
            for u in keep
            for w in self.adj[u]
            if u < w and w in index
        ]
        return ColoredGraph([self.colors[v] for v in keep], edges), keep

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "ColoredGraph":
        return ColoredGraph(self.colors, edges)

    def recolored(self, colors: Sequence[Color]) -> "ColoredGraph":
        return ColoredGraph(colors, self.edges)


@dataclass(frozen=True)
class Solution:
    """A vertex subset claimed to induce a connected balanced subgraph.

    ``path`` is set only by path-producing solvers and lists the vertices in
    path order.
    """

    vertices: tuple[int, ...]
    red_count: int
    blue_count: int
    path: tuple[int, ...] | None = None

    @classmethod
    def of(cls, g: ColoredGraph, vertices: Iterable[int], path: Sequence[int] | None = None) -> "Solution":
        vs = tuple(sorted(set(vertices)))
        red = sum(1 for v in vs if g.colors[v] is RED)
        return cls(vs, red, len(vs) - red, tuple(path) if path is not None else None)

    @classmethod
    def empty(cls) -> "Solution":
        return cls((), 0, 0)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_balanced(self) -> bool:
        return self.red_count == self.blue_count

    def __len__(self) -> int:
        return len(self.vertices)


class Verdict(str, enum.Enum):
    OK = "ok"
    NOT_SUBSET = "not_subset"
    NOT_BALANCED = "not_balanced"
    NOT_CONNECTED = "not_connected"


def induces_connected(g: ColoredGraph, vertices: Iterable[int]) -> bool:
    """True iff ``vertices`` induce a connected subgraph (vacuously for none)."""
    inside = set(vertices)
    if not inside:
        return True
    start = next(iter(inside))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in inside and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(inside)


def verify_solution(g: ColoredGraph, s: Solution | Sequence[int]) -> Verdict:
    vertices = s.vertices if isinstance(s, Solution) else tuple(s)
    if len(set(vertices)) != len(vertices) or any(not (0 <= v < g.n) for v in vertices):
        return Verdict.NOT_SUBSET
    red = sum(1 for v in vertices if g.colors[v] is RED)
    if 2 * red != len(vertices):
        return Verdict.NOT_BALANCED
    if not induces_connected(g, vertices):
        return Verdict.NOT_CONNECTED
    return Verdict.OK


def components(g: ColoredGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    comp = [-1] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if comp[w] == -1:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        members.sort()
        out.append(members)
    return out


def is_connected(g: ColoredGraph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def bfs_distances(g: ColoredGraph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def better(a: Solution, b: Solution) -> bool:
    """True iff ``a`` beats ``b``: larger, or equal size and lexicographically smaller."""
    if a.size != b.size:
        return a.size > b.size
    return a.vertices < b.vertices


def solve_per_component(g: ColoredGraph, solver) -> Solution:
    """Run ``solver`` on every component and keep the best lifted result.

    Ties go to the earlier component (the one holding the smaller vertex ids).
    """
    comps = components(g)
    if len(comps) == 1:
        return solver(g)
    best = Solution.empty()
    for members in comps:
        sub, back = g.induced(members)
        s = solver(sub)
        lifted = Solution.of(g, (back[v] for v in s.vertices),
                             None if s.path is None else [back[v] for v in s.path])
        if lifted.size > best.size:
            best = lifted
    return best
