"""Hardness gadgets: build BCS instances from EC3Set, Steiner tree and Hamiltonian path.

Vertex ids are laid out in a fixed order per gadget so outputs are stable:

* EC3Set gadgets: elements ``0..3k-1`` (red), then one blue vertex per set,
  then the blue path ``b_1..``, then (bipartite and chordal variants only)
  the red path ``r_1..r_3k``.
* Steiner gadget: the original vertices (blue), then one red pendant per
  terminal in terminal order, then the red filler vertices ``Z`` hung off the
  first pendant.
* Hamiltonian-path gadget: the original vertices, then the universal dummy
  when the vertex count is odd; the lower half of the ids is red.

Every gadget records each vertex's role in ``vertex_map`` and the solution
size that certifies a yes-instance in ``target_size``. ``map_back`` turns a
solution of that size into a certificate for the source problem.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import BudgetTooSmall, GraphFormatError, InvalidInstance, NotTargetSize
from .generate import make_rng
from .graph import BLUE, RED, ColoredGraph, Solution, Verdict, components, verify_solution
from .io import PlainGraph


@dataclass(frozen=True)
class Ec3SetInstance:
    universe_size: int
    sets: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(tuple(s) for s in self.sets))
        if self.universe_size <= 0 or self.universe_size % 3:
            raise InvalidInstance(f"universe size {self.universe_size} is not a positive multiple of 3")
        for i, s in enumerate(self.sets):
            if len(s) != 3 or len(set(s)) != 3:
                raise InvalidInstance(f"set {i} = {s} does not have exactly 3 distinct elements")
            if any(not 0 <= x < self.universe_size for x in s):
                raise InvalidInstance(f"set {i} = {s} has an element outside 0..{self.universe_size - 1}")

    @property
    def k(self) -> int:
        return self.universe_size // 3

    @property
    def m(self) -> int:
        return len(self.sets)

    def is_exact_cover(self, chosen: Sequence[int]) -> bool:
        covered = [x for i in chosen for x in self.sets[i]]
        return len(covered) == self.universe_size and len(set(covered)) == self.universe_size


@dataclass(frozen=True)
class SteinerInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    terminals: tuple[int, ...]
    budget: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(sorted((min(e), max(e)) for e in self.edges)))
        object.__setattr__(self, "terminals", tuple(self.terminals))
        if not self.terminals:
            raise InvalidInstance("at least one terminal is required")
        if len(set(self.terminals)) != len(self.terminals):
            raise InvalidInstance("duplicate terminal")
        if any(not 0 <= t < self.n for t in self.terminals):
            raise InvalidInstance("terminal out of range")
        if self.budget < 0:
            raise InvalidInstance("budget must be nonnegative")

    @classmethod
    def from_plain(cls, pg: PlainGraph) -> "SteinerInstance":
        if pg.budget is None:
            raise GraphFormatError("Steiner input needs a 'k <budget>' line")
        return cls(pg.n, tuple(pg.edges), tuple(pg.terminals), pg.budget)

    def plain_graph(self) -> ColoredGraph:
        return ColoredGraph([BLUE] * self.n, self.edges)


@dataclass(frozen=True)
class SteinerTree:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass
class ReductionOutput:
    kind: str
    graph: ColoredGraph
    vertex_map: dict[str, list[int]]
    target_size: int
    special_vertex: int | None = None
    source: Any = field(default=None, repr=False)

    def role_of(self, v: int) -> tuple[str, int]:
        for role, ids in self.vertex_map.items():
            if v in ids:
                return role, ids.index(v)
        raise KeyError(v)

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "target_size": self.target_size,
            "special_vertex": self.special_vertex,
            "vertex_map": self.vertex_map,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _ec3_core(x: Ec3SetInstance, path_len: int, red_path: bool) -> tuple[list, list, dict]:
    k, m = x.k, x.m
    colors = [RED] * (3 * k) + [BLUE] * m + [BLUE] * path_len
    elements = list(range(3 * k))
    set_ids = list(range(3 * k, 3 * k + m))
    b_path = list(range(3 * k + m, 3 * k + m + path_len))
    edges = [(set_ids[i], e) for i, s in enumerate(x.sets) for e in s]
    edges += list(zip(b_path, b_path[1:]))
    edges += [(s, b_path[-1]) for s in set_ids]
    roles = {"u": elements, "s": set_ids, "b_path": b_path}
    if red_path:
        start = len(colors)
        r_path = list(range(start, start + 3 * k))
        colors += [RED] * (3 * k)
        edges += list(zip(r_path, r_path[1:]))
        edges.append((r_path[-1], b_path[0]))
        roles["r_path"] = r_path
    return colors, edges, roles


def _two_colorable(g: ColoredGraph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def reduce_ec3set_bcs(x: Ec3SetInstance) -> ReductionOutput:
    colors, edges, roles = _ec3_core(x, 5 * x.k, red_path=True)
    g = ColoredGraph(colors, edges)
    assert _two_colorable(g), "EC3Set gadget must be bipartite"
    return ReductionOutput("ec3set", g, roles, 12 * x.k, source=x)


def reduce_ec3set_bcs_chordal(x: Ec3SetInstance) -> ReductionOutput:
    colors, edges, roles = _ec3_core(x, 5 * x.k, red_path=True)
    edges += list(itertools.combinations(roles["s"], 2))
    return ReductionOutput("ec3set-chordal", ColoredGraph(colors, edges), roles, 12 * x.k, source=x)


def reduce_ec3set_existence(x: Ec3SetInstance) -> ReductionOutput:
    colors, edges, roles = _ec3_core(x, 2 * x.k, red_path=False)
    g = ColoredGraph(colors, edges)
    return ReductionOutput("ec3set-exist", g, roles, 6 * x.k, special_vertex=roles["b_path"][0], source=x)


def reduce_stpg_bcs(x: SteinerInstance) -> ReductionOutput:
    """Planar Steiner tree to BCS.

    A tree through the terminals has at most (component size - 1) edges, so
    when all terminals share a component the budget is first capped at that
    value; this keeps the equivalence exact for budgets the component cannot
    use.
    """
    if len(x.terminals) > x.budget + 1:
        raise BudgetTooSmall(f"{len(x.terminals)} terminals cannot fit in a tree with {x.budget} edges")
    home = next(set(c) for c in components(x.plain_graph()) if x.terminals[0] in c)
    budget = x.budget
    if home.issuperset(x.terminals):
        budget = min(budget, len(home) - 1)
    n, t = x.n, len(x.terminals)
    pendants = list(range(n, n + t))
    fillers = list(range(n + t, n + t + max(budget + 1 - t, 0)))
    colors = [BLUE] * n + [RED] * (t + len(fillers))
    edges = list(x.edges)
    edges += [(u, p) for u, p in zip(x.terminals, pendants)]
    edges += [(pendants[0], z) for z in fillers]
    roles = {"Q": list(range(n)), "u'": pendants, "Z": fillers}
    return ReductionOutput("stpg", ColoredGraph(colors, edges), roles, 2 * (budget + 1), source=x)


def reduce_hampath_bcp(n: int, edges: Sequence[tuple[int, int]]) -> ReductionOutput:
    """Hamiltonian path to balanced path; pads odd vertex counts with a universal dummy."""
    edges = [tuple(e) for e in edges]
    roles = {"Q": list(range(n)), "dummy": []}
    total = n
    if n % 2:
        edges += [(v, n) for v in range(n)]
        roles["dummy"] = [n]
        total = n + 1
    colors = [RED if v < total // 2 else BLUE for v in range(total)]
    return ReductionOutput("hampath", ColoredGraph(colors, edges), roles, total, source=(n, tuple(edges)))


def map_back(out: ReductionOutput, sol: Solution):
    """Source certificate from a gadget solution that meets the target size.

    EC3Set gadgets give the sorted set indices of the cover, the Steiner
    gadget a ``SteinerTree``, and the Hamiltonian-path gadget the vertex order
    of a Hamiltonian path in the padded graph.
    """
    if sol.size != out.target_size:
        raise NotTargetSize(f"solution has {sol.size} vertices, target is {out.target_size}")
    verdict = verify_solution(out.graph, sol)
    if verdict is not Verdict.OK:
        raise NotTargetSize(f"solution does not verify on the gadget: {verdict.value}")
    chosen = set(sol.vertices)
    if out.kind.startswith("ec3set"):
        if out.special_vertex is not None and out.special_vertex not in chosen:
            raise NotTargetSize("solution misses the special vertex")
        set_ids = out.vertex_map["s"]
        cover = [i for i, v in enumerate(set_ids) if v in chosen]
        assert out.source.is_exact_cover(cover), f"sets {cover} are not an exact cover"
        return cover
    if out.kind == "stpg":
        x: SteinerInstance = out.source
        blue = sorted(v for v in chosen if v < x.n)
        tree_edges = _bfs_tree_edges(x.plain_graph(), blue)
        assert set(x.terminals) <= set(blue), "Steiner certificate misses a terminal"
        assert len(tree_edges) == len(blue) - 1, "blue part of the solution is disconnected"
        assert len(tree_edges) <= x.budget
        return SteinerTree(tuple(blue), tuple(tree_edges))
    if out.kind == "hampath":
        path = sol.path
        if path is None:
            path = _hamiltonian_order(out.graph)
        g = out.graph
        assert len(path) == g.n and all(g.has_edge(a, b) for a, b in zip(path, path[1:])), \
            "solution path is not a Hamiltonian path"
        return list(path)
    raise ValueError(f"unknown reduction kind {out.kind!r}")


def _bfs_tree_edges(g: ColoredGraph, vertices: Sequence[int]) -> list[tuple[int, int]]:
    if not vertices:
        return []
    inside = set(vertices)
    seen = {vertices[0]}
    queue = deque([vertices[0]])
    edges = []
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in inside and w not in seen:
                seen.add(w)
                edges.append((min(u, w), max(u, w)))
                queue.append(w)
    return edges


def _hamiltonian_order(g: ColoredGraph) -> list[int]:
    full = (1 << g.n) - 1
    dead: set[tuple[int, int]] = set()

    def extend(path: list[int], visited: int) -> list[int] | None:
        if visited == full:
            return path
        end = path[-1]
        if (end, visited) in dead:
            return None
        for w in g.adj[end]:
            if not visited >> w & 1:
                found = extend(path + [w], visited | (1 << w))
                if found:
                    return found
        dead.add((end, visited))
        return None

    for v in range(g.n):
        found = extend([v], 1 << v)
        if found:
            return found
    raise AssertionError("no Hamiltonian path in the gadget")


# -- planted and adversarial source instances ---------------------------------


def exact_covers(x: Ec3SetInstance) -> list[tuple[int, ...]]:
    """All exact covers by brute force over k-subsets of the sets."""
    return [c for c in itertools.combinations(range(x.m), x.k) if x.is_exact_cover(c)]


def planted_ec3set(k: int, m: int, seed=0) -> tuple[Ec3SetInstance, list[int]]:
    """Random instance with a hidden exact cover; returns it with the cover's set indices."""
    if m < k:
        raise InvalidInstance(f"m={m} sets cannot cover a universe of {3 * k} elements")
    rng = make_rng(seed)
    perm = rng.permutation(3 * k).tolist()
    sets = [tuple(sorted(perm[3 * i:3 * i + 3])) for i in range(k)]
    for _ in range(m - k):
        sets.append(tuple(sorted(rng.choice(3 * k, size=3, replace=False).tolist())))
    order = rng.permutation(m).tolist()
    shuffled = [sets[i] for i in order]
    cover = sorted(order.index(i) for i in range(k))
    return Ec3SetInstance(3 * k, tuple(shuffled)), cover


def unsatisfiable_ec3set(k: int, m: int, seed=0, max_tries: int = 10_000) -> Ec3SetInstance:
    """Random instance with no exact cover (rejection sampling)."""
    if m < k:
        raise InvalidInstance(f"m={m} is below k={k}")
    if k == 1:
        raise InvalidInstance("every 3-subset of a 3-element universe is an exact cover")
    rng = make_rng(seed)
    for _ in range(max_tries):
        sets = tuple(tuple(sorted(rng.choice(3 * k, size=3, replace=False).tolist())) for _ in range(m))
        x = Ec3SetInstance(3 * k, sets)
        if not exact_covers(x):
            return x
    raise RuntimeError("could not sample an unsatisfiable instance")


def random_planar_graph(n: int, seed=0, extra: float = 0.3) -> tuple[int, list[tuple[int, int]]]:
    """Connected random subgraph of a square grid (hence planar) on ``n`` vertices."""
    rng = make_rng(seed)
    side = max(1, int(n ** 0.5) + 2)
    start = (int(rng.integers(side)), int(rng.integers(side)))
    cells = [start]
    index = {start: 0}
    tree_edges = []
    while len(cells) < n:
        r, c = cells[int(rng.integers(len(cells)))]
        dr, dc = [(0, 1), (1, 0), (0, -1), (-1, 0)][int(rng.integers(4))]
        nxt = (r + dr, c + dc)
        if nxt in index or not (0 <= nxt[0] < side and 0 <= nxt[1] < side):
            continue
        index[nxt] = len(cells)
        cells.append(nxt)
        tree_edges.append((index[(r, c)], index[nxt]))
    edges = set((min(e), max(e)) for e in tree_edges)
    for (r, c), i in index.items():
        for nxt in ((r + 1, c), (r, c + 1)):
            j = index.get(nxt)
            if j is not None and (min(i, j), max(i, j)) not in edges and rng.random() < extra:
                edges.add((min(i, j), max(i, j)))
    return n, sorted(edges)


def planted_steiner(n: int, max_budget: int, seed=0) -> tuple[SteinerInstance, list[int]]:
    """Planar instance whose terminals lie on a random subtree with at most ``max_budget`` edges.

    Returns the instance and the planted tree's vertex set.
    """
    rng = make_rng(seed)
    n, edges = random_planar_graph(n, rng)
    g = ColoredGraph([BLUE] * n, edges)
    size = int(rng.integers(1, min(max_budget + 1, n) + 1))
    start = int(rng.integers(n))
    grown = [start]
    while len(grown) < size:
        frontier = sorted({w for v in grown for w in g.adj[v]} - set(grown))
        grown.append(frontier[int(rng.integers(len(frontier)))])
    t = int(rng.integers(1, size + 1))
    picks = rng.permutation(size)[:t].tolist()
    terminals = tuple(grown[i] for i in picks)
    budget = int(rng.integers(size - 1, max_budget + 1))
    return SteinerInstance(n, tuple(edges), terminals, budget), sorted(grown)


def parse_ec3set(text: str | bytes) -> Ec3SetInstance:
    """``u <3k>`` followed by one ``s <a> <b> <c>`` line per set; ``c`` lines are comments."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    universe = None
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "u" and len(parts) == 2 and universe is None:
                universe = int(parts[1])
            elif parts[0] == "s" and len(parts) == 4 and universe is not None:
                sets.append(tuple(int(p) for p in parts[1:]))
            else:
                raise GraphFormatError(f"unexpected line {raw.strip()!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError("expected integers", lineno) from None
    if universe is None:
        raise GraphFormatError("missing 'u <3k>' line")
    return Ec3SetInstance(universe, tuple(sets))


def format_ec3set(x: Ec3SetInstance) -> str:
    return "".join([f"u {x.universe_size}\n"] + [f"s {a} {b} {c}\n" for a, b, c in x.sets])
