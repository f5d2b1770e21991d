"""Seeded random instance generators for each supported graph class.

All generators draw from ``numpy.random.Generator(PCG64(seed))`` so a given
``(class, n, red_frac, seed)`` always produces the same graph.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

from .graph import BLUE, RED, Color, ColoredGraph

CLASSES = ("tree", "split", "bipartite", "diam2", "random")


def make_rng(seed: int | np.random.Generator) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def random_colors(n: int, red_frac: float, rng: np.random.Generator) -> list[Color]:
    if not 0.0 <= red_frac <= 1.0:
        raise ValueError(f"red_frac must be in [0, 1], got {red_frac}")
    n_red = int(round(red_frac * n))
    picks = set(rng.permutation(n)[:n_red].tolist())
    return [RED if v in picks else BLUE for v in range(n)]


def _prufer_tree(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed=0, red_frac: float = 0.5) -> ColoredGraph:
    """Uniform labelled tree (Pruefer decoding) with a random coloring."""
    rng = make_rng(seed)
    edges = _prufer_tree(n, rng)
    return ColoredGraph(random_colors(n, red_frac, rng), edges)


def random_split(n: int, seed=0, red_frac: float = 0.5) -> ColoredGraph:
    """Connected split graph with a random clique size and random S-to-K attachments."""
    rng = make_rng(seed)
    if n == 0:
        return ColoredGraph([])
    colors = random_colors(n, red_frac, rng)
    k = int(rng.integers(1, n + 1))
    perm = rng.permutation(n)
    clique, indep = perm[:k], perm[k:]
    iu, ju = np.triu_indices(k, k=1)
    p = float(rng.uniform(0.05, 0.9))
    hits = rng.random((n - k, k)) < p
    # every S vertex needs at least one clique neighbor to stay connected
    lonely = np.nonzero(~hits.any(axis=1))[0]
    hits[lonely, rng.integers(k, size=lonely.size)] = True
    si, kj = np.nonzero(hits)
    edges = np.concatenate([
        np.stack([clique[iu], clique[ju]], axis=1),
        np.stack([indep[si], clique[kj]], axis=1),
    ])
    return ColoredGraph(colors, edges)


def random_bipartite(n: int, seed=0, red_frac: float = 0.5) -> ColoredGraph:
    """Connected graph whose coloring is a proper 2-coloring.

    Both colors get at least one vertex when ``n >= 2`` so the graph can be
    connected.
    """
    rng = make_rng(seed)
    if n <= 1:
        return ColoredGraph(random_colors(n, red_frac, rng))
    n_red = min(max(int(round(red_frac * n)), 1), n - 1)
    perm = rng.permutation(n).tolist()
    reds = set(perm[:n_red])
    colors = [RED if v in reds else BLUE for v in range(n)]
    red_list = sorted(reds)
    blue_list = [v for v in range(n) if v not in reds]
    red_order = rng.permutation(red_list).tolist()
    blue_order = rng.permutation(blue_list).tolist()
    placed_red, placed_blue = [red_order[0]], [blue_order[0]]
    edges = {(min(red_order[0], blue_order[0]), max(red_order[0], blue_order[0]))}
    rest = [(v, RED) for v in red_order[1:]] + [(v, BLUE) for v in blue_order[1:]]
    for i in rng.permutation(len(rest)).tolist():
        v, c = rest[i]
        pool = placed_blue if c is RED else placed_red
        w = pool[int(rng.integers(len(pool)))]
        edges.add((min(v, w), max(v, w)))
        (placed_red if c is RED else placed_blue).append(v)
    extra = float(rng.uniform(0.0, min(1.0, 4.0 / max(n, 1))))
    if extra > 0:
        for r in red_list:
            hits = rng.random(len(blue_list)) < extra
            for b, hit in zip(blue_list, hits.tolist()):
                if hit:
                    edges.add((min(r, b), max(r, b)))
    return ColoredGraph(colors, edges)


def _gnp_edges(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    if n < 2:
        return np.zeros((0, 2), dtype=np.int64)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return np.stack([iu[keep], ju[keep]], axis=1)


def random_graph(n: int, seed=0, red_frac: float = 0.5, p: float | None = None) -> ColoredGraph:
    """Erdos-Renyi G(n, p) with a random coloring."""
    rng = make_rng(seed)
    colors = random_colors(n, red_frac, rng)
    if p is None:
        p = float(rng.uniform(0.1, 0.6))
    return ColoredGraph(colors, _gnp_edges(n, p, rng))


def random_diam2(n: int, seed=0, red_frac: float = 0.5) -> ColoredGraph:
    """Random graph of diameter at most two.

    Starts from G(n, p) with ``p`` at or somewhat above the diameter-2
    threshold, then joins every pair still at distance three or more.
    """
    rng = make_rng(seed)
    colors = random_colors(n, red_frac, rng)
    if n <= 2:
        edges = [(0, 1)] if n == 2 else []
        return ColoredGraph(colors, edges)
    base = math.sqrt(2.0 * math.log(n) / n)
    p = min(1.0, base * float(rng.uniform(0.6, 1.6)))
    edges = _gnp_edges(n, p, rng)
    adj = np.zeros((n, n), dtype=np.float32)
    adj[edges[:, 0], edges[:, 1]] = 1.0
    adj[edges[:, 1], edges[:, 0]] = 1.0
    near = (adj > 0) | ((adj @ adj) > 0) | np.eye(n, dtype=bool)
    far_u, far_v = np.nonzero(np.triu(~near, k=1))
    # joining every pair at distance three or more leaves diameter at most two
    edges = np.concatenate([edges, np.stack([far_u, far_v], axis=1)])
    return ColoredGraph(colors, edges)


def generate(cls: str, n: int, seed: int, red_frac: float = 0.5) -> ColoredGraph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cls == "tree":
        return random_tree(n, seed, red_frac)
    if cls == "split":
        return random_split(n, seed, red_frac)
    if cls == "bipartite":
        return random_bipartite(n, seed, red_frac)
    if cls == "diam2":
        if n == 0:
            raise ValueError("diam2 generator needs at least one vertex")
        return random_diam2(n, seed, red_frac)
    if cls == "random":
        return random_graph(n, seed, red_frac)
    raise ValueError(f"unknown graph class {cls!r}")
