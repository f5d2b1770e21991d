"""Maximum balanced subtree on trees by pair-set dynamic programming.

For a rooted tree, every vertex ``v`` gets a pair set: the (red, blue) counts
realisable by a subtree hanging from ``v`` that contains ``v``, plus the empty
option (0, 0). Children are combined with Minkowski sums. Only one pair is
kept per difference ``blue - red`` (the one with the most vertices), so a pair
set is stored as a dense array indexed by that difference holding the red
count, with ``NEG`` for differences that cannot be realised.

Running the rooted DP from every vertex and keeping the best balanced
(difference 0) entry gives the optimum over all subtrees.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import NotATree
from .graph import RED, Color, ColoredGraph, Solution, components

NEG = -(1 << 40)


class PairSet:
    """Dominance-pruned pair set keyed by ``d = blue - red``."""

    __slots__ = ("lo", "best")

    def __init__(self, lo: int, best: np.ndarray) -> None:
        self.lo = lo
        self.best = best

    @classmethod
    def from_pairs(cls, pairs) -> "PairSet":
        pairs = list(pairs)
        if not pairs:
            return cls(0, np.array([0], dtype=np.int64))
        diffs = [b - r for r, b in pairs]
        lo, hi = min(diffs), max(diffs)
        best = np.full(hi - lo + 1, NEG, dtype=np.int64)
        for (r, b), d in zip(pairs, diffs):
            best[d - lo] = max(best[d - lo], r)
        return cls(lo, best)

    @classmethod
    def zero(cls) -> "PairSet":
        return cls(0, np.array([0], dtype=np.int64))

    def keys(self) -> list[int]:
        return [self.lo + i for i in np.nonzero(self.best >= 0)[0].tolist()]

    def items(self) -> Iterator[tuple[int, tuple[int, int]]]:
        for d in self.keys():
            r = int(self.best[d - self.lo])
            yield d, (r, r + d)

    def pairs(self) -> set[tuple[int, int]]:
        return {p for _, p in self.items()}

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return dict(self.items())

    def __contains__(self, d: int) -> bool:
        i = d - self.lo
        return 0 <= i < len(self.best) and self.best[i] >= 0

    def __getitem__(self, d: int) -> tuple[int, int]:
        if d not in self:
            raise KeyError(d)
        r = int(self.best[d - self.lo])
        return r, r + d

    def __len__(self) -> int:
        return int(np.count_nonzero(self.best >= 0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairSet):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self) -> str:
        return f"PairSet({self.as_dict()})"


def _trim(lo: int, best: np.ndarray, *extra: np.ndarray):
    present = np.nonzero(best >= 0)[0]
    a, b = int(present[0]), int(present[-1]) + 1
    return (lo + a, best[a:b]) + tuple(x[a:b] for x in extra)


def _maxplus(alo: int, a: np.ndarray, blo: int, b: np.ndarray) -> tuple[int, np.ndarray]:
    """Max-plus convolution, looping over the shorter operand."""
    if len(a) < len(b):
        alo, a, blo, b = blo, b, alo, a
    la = len(a)
    res = np.full(la + len(b) - 1, NEG, dtype=np.int64)
    for j in np.nonzero(b >= 0)[0].tolist():
        seg = res[j:j + la]
        np.maximum(seg, a + b[j], out=seg)
    res[res < 0] = NEG
    return _trim(alo + blo, res)


def _maxplus_choice(alo: int, a: np.ndarray, blo: int, b: np.ndarray):
    """Max-plus convolution that also records, per result key, the index into ``b`` used.

    Ties keep the smallest ``b`` index.
    """
    la = len(a)
    res = np.full(la + len(b) - 1, NEG, dtype=np.int64)
    choice = np.full(la + len(b) - 1, -1, dtype=np.int64)
    for j in np.nonzero(b >= 0)[0].tolist():
        cand = a + b[j]
        seg = res[j:j + la]
        win = cand > seg
        seg[win] = cand[win]
        choice[j:j + la][win] = j
    res[res < 0] = NEG
    return _trim(alo + blo, res, choice)


def _shift(lo: int, best: np.ndarray, color: Color) -> tuple[int, np.ndarray]:
    """Add ``v`` itself, then put back the empty option at key 0."""
    if color is RED:
        lo, best = lo - 1, np.where(best >= 0, best + 1, NEG)
    else:
        lo, best = lo + 1, best.copy()
    if lo > 0:
        best = np.concatenate([np.full(lo, NEG, dtype=np.int64), best])
        lo = 0
    elif lo + len(best) <= 0:
        best = np.concatenate([best, np.full(-lo - len(best) + 1, NEG, dtype=np.int64)])
    if best[-lo] < 0:
        best[-lo] = 0
    return lo, best


def pairset_leaf(color: Color) -> PairSet:
    return PairSet.from_pairs([(0, 0), (1, 0) if color is RED else (0, 1)])


def minkowski_sum(a: PairSet, b: PairSet) -> PairSet:
    return PairSet(*_maxplus(a.lo, a.best, b.lo, b.best))


def pairset_internal(children: Sequence[PairSet], color: Color) -> PairSet:
    lo, best = 0, np.array([0], dtype=np.int64)
    for child in children:
        lo, best = _maxplus(lo, best, child.lo, child.best)
    return PairSet(*_shift(lo, best, color))


@dataclass(frozen=True)
class RootedTree:
    graph: ColoredGraph
    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # post-order

    @classmethod
    def from_graph(cls, g: ColoredGraph, root: int = 0) -> "RootedTree":
        check_forest(g)
        if g.n and len(components(g)) != 1:
            raise NotATree("graph is a forest with several components, not a tree")
        parent, bfs = _bfs_tree(g.adj, root)
        children: list[list[int]] = [[] for _ in range(g.n)]
        for v in bfs[1:]:
            children[parent[v]].append(v)
        post = _post_order(root, children)
        return cls(g, root, tuple(parent), tuple(tuple(sorted(c)) for c in children), tuple(post))


def _bfs_tree(adj, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * len(adj)
    parent[root] = root
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
                queue.append(w)
    return parent, order


def _post_order(root: int, children) -> list[int]:
    out = []
    stack = [(root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            out.append(v)
            continue
        stack.append((v, True))
        for c in reversed(sorted(children[v])):
            stack.append((c, False))
    return out


def check_forest(g: ColoredGraph) -> None:
    """Raise ``NotATree`` naming the first edge (in sorted order) that closes a cycle."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.sorted_edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotATree(f"edge {u} {v} closes a cycle", cycle_edge=(u, v))
        parent[ru] = rv


def solve_rooted(t: RootedTree) -> Solution:
    """Maximum balanced subtree containing ``t.root`` (empty if none is balanced)."""
    g = t.graph
    tables: dict[int, tuple[int, np.ndarray]] = {}
    stages: dict[int, list[tuple[int, int, np.ndarray, int]]] = {}
    for v in t.order:
        lo, best = 0, np.array([0], dtype=np.int64)
        trail = []
        for c in t.children[v]:
            clo, cbest = tables[c]
            lo, best, choice = _maxplus_choice(lo, best, clo, cbest)
            trail.append((c, lo, choice, clo))
        stages[v] = trail
        tables[v] = _shift(lo, best, g.colors[v])

    lo, best = tables[t.root]
    if best[-lo] <= 0:
        return Solution.empty()

    chosen = []
    stack = [(t.root, 0)]
    while stack:
        v, d = stack.pop()
        vlo, vbest = tables[v]
        if d == 0 and vbest[-vlo] == 0:
            continue
        chosen.append(v)
        x = d + 1 if g.colors[v] is RED else d - 1
        for c, res_lo, choice, clo in reversed(stages[v]):
            y = clo + int(choice[x - res_lo])
            stack.append((c, y))
            x -= y
        assert x == 0, "pair-set reconstruction lost track of the difference"
    return Solution.of(g, chosen)


def balanced_value(g: ColoredGraph, root: int) -> int:
    """Red count of the best balanced subtree containing ``root`` (values only)."""
    parent, bfs = _bfs_tree(g.adj, root)
    tables: dict[int, tuple[int, np.ndarray]] = {}
    for v in reversed(bfs):
        lo, best = 0, np.array([0], dtype=np.int64)
        for c in g.adj[v]:
            if parent[c] != v:
                continue
            clo, cbest = tables.pop(c)
            if lo == 0 and len(best) == 1:
                lo, best = clo, cbest
            else:
                lo, best = _maxplus(lo, best, clo, cbest)
        tables[v] = _shift(lo, best, g.colors[v])
    lo, best = tables[root]
    return int(best[-lo])


def solve_tree(g: ColoredGraph, threads: int = 1) -> Solution:
    """Best balanced subtree over all roots; ties go to the smallest root id."""
    check_forest(g)
    best_val, best_root, best_comp = 0, None, None
    for members in components(g):
        sub, back = g.induced(members)
        roots = range(sub.n)
        if threads > 1 and sub.n > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                values = list(pool.map(lambda r: balanced_value(sub, r), roots))
        else:
            values = [balanced_value(sub, r) for r in roots]
        for r, val in enumerate(values):
            if val > best_val or (val == best_val and val > 0 and back[r] < best_root):
                best_val, best_root, best_comp = val, back[r], (sub, back, r)
    if best_comp is None:
        return Solution.empty()
    sub, back, r = best_comp
    local = solve_rooted(RootedTree.from_graph(sub, r))
    return Solution.of(g, (back[v] for v in local.vertices))
