"""Graph-class recognition used for dispatch and solver preconditions."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredGraph, components


@dataclass(frozen=True)
class SplitPartition:
    """Independent set ``S`` and clique ``K`` partitioning the vertex set."""

    S: tuple[int, ...]
    K: tuple[int, ...]

    def by_color(self, g: ColoredGraph, which: str, color) -> list[int]:
        part = self.S if which == "S" else self.K
        return [v for v in part if g.colors[v] is color]

    def check(self, g: ColoredGraph) -> bool:
        if sorted(self.S + self.K) != list(range(g.n)):
            return False
        ks = self.K
        for i, u in enumerate(ks):
            for w in ks[i + 1:]:
                if not g.has_edge(u, w):
                    return False
        s_set = set(self.S)
        return all(w not in s_set for u in self.S for w in g.adj[u])


@dataclass(frozen=True)
class ClassReport:
    is_connected: bool
    is_tree: bool
    is_split: bool
    split: SplitPartition | None
    is_proper_bipartite: bool
    monochromatic_edge: tuple[int, int] | None
    diameter_le_2: bool
    far_pair: tuple[int, int] | None

    def lines(self) -> list[str]:
        out = [
            f"connected {str(self.is_connected).lower()}",
            f"tree {str(self.is_tree).lower()}",
            f"split {str(self.is_split).lower()}",
        ]
        if self.split is not None:
            out.append("split_K " + " ".join(map(str, self.split.K)))
            out.append("split_S " + " ".join(map(str, self.split.S)))
        out.append(f"proper_bipartite {str(self.is_proper_bipartite).lower()}")
        if self.monochromatic_edge is not None:
            out.append("monochromatic_edge {} {}".format(*self.monochromatic_edge))
        out.append(f"diameter_le_2 {str(self.diameter_le_2).lower()}")
        if self.far_pair is not None:
            out.append("far_pair {} {}".format(*self.far_pair))
        return out


def find_split_partition(g: ColoredGraph) -> SplitPartition | None:
    """Hammer-Simeone degree-sequence test.

    Vertices are ordered by (degree descending, id ascending); ``K`` is the
    prefix of length ``max{i : d_i >= i - 1}``, which is a maximum clique when
    the graph is split. Returns ``None`` for non-split graphs.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    k = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            k = i
    if sum(degs[:k]) != k * (k - 1) + sum(degs[k:]):
        return None
    return SplitPartition(S=tuple(sorted(order[k:])), K=tuple(sorted(order[:k])))


def monochromatic_edge(g: ColoredGraph) -> tuple[int, int] | None:
    """Smallest edge joining two vertices of the same color, if any."""
    bad = [e for e in g.edges if g.colors[e[0]] is g.colors[e[1]]]
    return min(bad) if bad else None


def far_pair(g: ColoredGraph) -> tuple[int, int] | None:
    """A pair at distance greater than two (or disconnected), else ``None``.

    Uses bitset two-step reachability and stops at the first failing vertex.
    """
    n = g.n
    full = (1 << n) - 1
    masks = g.adj_masks
    for u in sorted(range(n), key=g.degree):
        reach = masks[u] | (1 << u)
        for w in g.adj[u]:
            reach |= masks[w]
            if reach == full:
                break
        if reach != full:
            missing = full & ~reach
            v = (missing & -missing).bit_length() - 1
            return (u, v) if u < v else (v, u)
    return None


def classify(g: ColoredGraph) -> ClassReport:
    connected = g.n == 0 or len(components(g)) == 1
    split = find_split_partition(g)
    mono = monochromatic_edge(g)
    far = far_pair(g)
    return ClassReport(
        is_connected=connected,
        is_tree=connected and g.m == max(g.n - 1, 0),
        is_split=split is not None,
        split=split,
        is_proper_bipartite=mono is None,
        monochromatic_edge=mono,
        diameter_le_2=far is None,
        far_pair=far,
    )
