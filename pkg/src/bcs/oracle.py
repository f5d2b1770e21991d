"""Exhaustive exact solvers used as ground truth on small instances.

Subsets are handled as integer bitsets (bit ``i`` is vertex ``i``) in numpy
``int64`` arrays. Only balanced subsets are ever materialised: for each
per-color count ``j`` the candidates are all unions of a ``j``-subset of the
red vertices with a ``j``-subset of the blue vertices, scanned from the
largest ``j`` down. Connectivity of every candidate is decided by a bitset
BFS from its lowest set bit.

Ties between optimal vertex sets are broken towards the lexicographically
smallest sorted vertex list.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .errors import SizeExceedsCap
from .graph import BLUE, RED, ColoredGraph, Solution

log = logging.getLogger(__name__)

HARD_CAP = 26
_CHUNK = 8


@dataclass(frozen=True)
class OracleConfig:
    max_n: int = 20
    enumerate_all: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.max_n <= HARD_CAP:
            raise ValueError(f"max_n must be in 1..{HARD_CAP}, got {self.max_n}")


DEFAULT = OracleConfig()


def _check_cap(n: int, cfg: OracleConfig) -> None:
    if n > cfg.max_n:
        raise SizeExceedsCap(f"graph has {n} vertices, oracle cap is {cfg.max_n}")
    if n > 22:
        log.info("oracle on %d vertices: expect seconds and hundreds of MB", n)


class _Tables:
    """Per-byte lookup tables turning bitset ops into a few array gathers."""

    def __init__(self, g: ColoredGraph) -> None:
        n = g.n
        self.n = n
        self.chunks = max(1, (n + _CHUNK - 1) // _CHUNK)
        masks = g.adj_masks
        self.nbr = []
        self.rev = []
        for c in range(self.chunks):
            nbr = np.zeros(256, dtype=np.int64)
            rev = np.zeros(256, dtype=np.int64)
            for byte in range(256):
                acc = 0
                racc = 0
                for bit in range(_CHUNK):
                    v = c * _CHUNK + bit
                    if byte >> bit & 1 and v < n:
                        acc |= masks[v]
                        racc |= 1 << (n - 1 - v)
                nbr[byte] = acc
                rev[byte] = racc
            self.nbr.append(nbr)
            self.rev.append(rev)

    def _gather(self, tables, x: np.ndarray) -> np.ndarray:
        out = tables[0][x & 0xFF]
        for c in range(1, self.chunks):
            out |= tables[c][(x >> (c * _CHUNK)) & 0xFF]
        return out

    def neighbours(self, x: np.ndarray) -> np.ndarray:
        return self._gather(self.nbr, x)

    def reversed_bits(self, x: np.ndarray) -> np.ndarray:
        """Bit-reversed masks; for equal-size sets, larger means lexicographically smaller."""
        return self._gather(self.rev, x)

    def connected(self, masks: np.ndarray) -> np.ndarray:
        reach = masks & -masks
        while True:
            grown = (reach | self.neighbours(reach)) & masks
            if np.array_equal(grown, reach):
                return reach == masks
            reach = grown


def _combo_masks(vertices: list[int], j: int, must: int | None = None) -> np.ndarray:
    combos = itertools.combinations(vertices, j)
    if must is not None:
        combos = (c for c in combos if must in c)
    out = [sum(1 << v for v in c) for c in combos]
    return np.array(out, dtype=np.int64)


def _mask_to_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _search(
    g: ColoredGraph,
    cfg: OracleConfig,
    *,
    must: int | None = None,
    min_size: int = 0,
    collect_all: bool = False,
) -> list[Solution]:
    _check_cap(g.n, cfg)
    if g.n == 0:
        return []
    reds = g.vertices_of(RED)
    blues = g.vertices_of(BLUE)
    tables = _Tables(g)
    must_red = must is not None and must in reds
    must_blue = must is not None and must in blues
    for j in range(min(len(reds), len(blues)), 0, -1):
        if 2 * j < min_size:
            break
        red_masks = _combo_masks(reds, j, must if must_red else None)
        blue_masks = _combo_masks(blues, j, must if must_blue else None)
        if red_masks.size == 0 or blue_masks.size == 0:
            continue
        cand = (red_masks[:, None] | blue_masks[None, :]).ravel()
        ok = cand[tables.connected(cand)]
        if ok.size == 0:
            continue
        order = np.argsort(-tables.reversed_bits(ok), kind="stable")
        picked = ok[order] if collect_all else ok[order[:1]]
        return [Solution.of(g, _mask_to_vertices(int(m))) for m in picked]
    return []


def oracle_bcs(g: ColoredGraph, cfg: OracleConfig = DEFAULT) -> Solution:
    """Maximum balanced connected induced subgraph by exhaustive search."""
    found = _search(g, cfg)
    return found[0] if found else Solution.empty()


def oracle_bcs_all(g: ColoredGraph, cfg: OracleConfig = DEFAULT) -> list[Solution]:
    """All optimal solutions in tie-break order (just the first unless ``cfg.enumerate_all``)."""
    found = _search(g, cfg, collect_all=cfg.enumerate_all)
    return found or [Solution.empty()]


def oracle_bcs_at_least(g: ColoredGraph, target: int, cfg: OracleConfig = DEFAULT) -> Solution | None:
    """Best solution of size at least ``target``, or ``None`` if there is none.

    Scans only the layers that could reach the target, which keeps decision
    queries on reduction gadgets cheap even near the cap.
    """
    if target <= 0:
        return oracle_bcs(g, cfg)
    found = _search(g, cfg, min_size=target)
    return found[0] if found else None


def oracle_bcs_containing(g: ColoredGraph, v: int, cfg: OracleConfig = DEFAULT) -> Solution | None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} not in graph")
    found = _search(g, cfg, must=v)
    return found[0] if found else None


def _path_dp(g: ColoredGraph) -> np.ndarray:
    """``dp[mask]`` = bitset of vertices that end a simple path visiting exactly ``mask``."""
    n = g.n
    size = 1 << n
    dtype = np.int32 if n < 31 else np.int64
    dp = np.zeros(size, dtype=dtype)
    for v in range(n):
        dp[1 << v] = 1 << v
    all_masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int8)
    for v in range(n):
        pop += ((all_masks >> v) & 1).astype(np.int8)
    adj = g.adj_masks
    for s in range(1, n):
        layer = all_masks[pop == s]
        ends = dp[layer].astype(np.int64)
        live = ends != 0
        layer, ends = layer[live], ends[live]
        for u in range(n):
            sel = layer[(((layer >> u) & 1) == 0) & ((ends & adj[u]) != 0)]
            if sel.size:
                dp[sel | (1 << u)] |= dtype(1 << u)
    return dp


def oracle_balanced_path(g: ColoredGraph, cfg: OracleConfig = DEFAULT) -> Solution:
    """Largest balanced simple path; the returned solution carries the path order."""
    _check_cap(g.n, cfg)
    n = g.n
    if n == 0:
        return Solution.empty()
    dp = _path_dp(g)
    tables = _Tables(g)
    masks = np.nonzero(dp)[0].astype(np.int64)
    red_mask = g.color_masks[0]
    reds = np.zeros(masks.size, dtype=np.int64)
    blues = np.zeros(masks.size, dtype=np.int64)
    for v in range(n):
        bit = (masks >> v) & 1
        if red_mask >> v & 1:
            reds += bit
        else:
            blues += bit
    balanced = masks[(reds == blues) & (reds > 0)]
    if balanced.size == 0:
        return Solution.empty()
    sizes = np.zeros(balanced.size, dtype=np.int64)
    for v in range(n):
        sizes += (balanced >> v) & 1
    top = balanced[sizes == sizes.max()]
    best = int(top[np.argmax(tables.reversed_bits(top))])
    return Solution.of(g, _mask_to_vertices(best), path=_rebuild_path(g, dp, best))


def _rebuild_path(g: ColoredGraph, dp: np.ndarray, mask: int) -> list[int]:
    ends = int(dp[mask])
    end = (ends & -ends).bit_length() - 1
    path = [end]
    while mask != 1 << end:
        prev_mask = mask ^ (1 << end)
        options = int(dp[prev_mask]) & g.adj_masks[end]
        end = (options & -options).bit_length() - 1
        path.append(end)
        mask = prev_mask
    path.reverse()
    return path


def oracle_ham_path(g: ColoredGraph | int, edges=None, cfg: OracleConfig = DEFAULT) -> bool:
    """Hamiltonian-path existence by memoised depth-first search.

    Accepts a graph (colors ignored) or a vertex count with an edge list.
    Deliberately independent of the balanced-path DP.
    """
    if isinstance(g, ColoredGraph):
        n, adj = g.n, g.adj_masks
    else:
        n = g
        nbr = [0] * n
        for u, v in edges or ():
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        adj = tuple(nbr)
    if n > cfg.max_n:
        raise SizeExceedsCap(f"graph has {n} vertices, oracle cap is {cfg.max_n}")
    if n <= 1:
        return True
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()

    def extend(end: int, visited: int) -> bool:
        if visited == full:
            return True
        if (end, visited) in dead:
            return False
        options = adj[end] & ~visited
        while options:
            low = options & -options
            w = low.bit_length() - 1
            if extend(w, visited | low):
                return True
            options ^= low
        dead.add((end, visited))
        return False

    return any(extend(v, 1 << v) for v in range(n))
