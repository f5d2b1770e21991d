"""Line-oriented text formats for graphs, solutions and Steiner instances.

Graph files::

    c optional comment
    p bcs <n> <m>
    v <id> <R|B>        (n lines)
    e <u> <v>           (m lines)

Solution files are ``s <size>`` followed by one ``l <id>`` line per vertex in
ascending order. Uncolored graphs (Steiner and Hamiltonian-path inputs) use a
``p st <n> <m>`` header, no ``v`` lines, and optional ``t <id>`` terminal
lines plus a single ``k <budget>`` line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import GraphFormatError
from .graph import ColoredGraph, Color, Solution


def _lines(text: str | bytes):
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not ASCII ({exc.reason})") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        yield lineno, parts


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} must be an integer, got {token!r}", lineno) from None


def _header(parts: list[str], lineno: int, kind: str) -> tuple[int, int]:
    if parts[0] != "p":
        raise GraphFormatError("first non-comment line must be the 'p' header", lineno)
    if len(parts) != 4 or parts[1] != kind:
        raise GraphFormatError(f"malformed header, expected 'p {kind} <n> <m>'", lineno)
    n = _int(parts[2], lineno, "vertex count")
    m = _int(parts[3], lineno, "edge count")
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    return n, m


def _edge(parts: list[str], lineno: int, n: int, seen: set[tuple[int, int]]) -> tuple[int, int]:
    if len(parts) != 3:
        raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
    u = _int(parts[1], lineno, "edge endpoint")
    v = _int(parts[2], lineno, "edge endpoint")
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", lineno)
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"edge endpoint out of range 0..{n - 1}", lineno)
    e = (u, v) if u < v else (v, u)
    if e in seen:
        raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", lineno)
    seen.add(e)
    return e


def parse_graph(text: str | bytes) -> ColoredGraph:
    n = m = -1
    colors: list[Color | None] = []
    edges: set[tuple[int, int]] = set()
    n_vertices = 0
    last = 0
    for lineno, parts in _lines(text):
        last = lineno
        if n < 0:
            n, m = _header(parts, lineno, "bcs")
            colors = [None] * n
            continue
        tag = parts[0]
        if tag == "v":
            if len(parts) != 3:
                raise GraphFormatError("malformed vertex line, expected 'v <id> <R|B>'", lineno)
            vid = _int(parts[1], lineno, "vertex id")
            if not 0 <= vid < n:
                raise GraphFormatError(f"vertex id {vid} out of range 0..{n - 1}", lineno)
            if colors[vid] is not None:
                raise GraphFormatError(f"duplicate vertex id {vid}", lineno)
            try:
                colors[vid] = Color.from_token(parts[2])
            except ValueError:
                raise GraphFormatError(f"unknown color token {parts[2]!r}", lineno) from None
            n_vertices += 1
        elif tag == "e":
            _edge(parts, lineno, n, edges)
        elif tag == "p":
            raise GraphFormatError("duplicate 'p' header", lineno)
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n < 0:
        raise GraphFormatError("missing 'p bcs <n> <m>' header", last or None)
    if n_vertices != n:
        raise GraphFormatError(f"header declares {n} vertices but {n_vertices} 'v' lines found", last)
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} 'e' lines found", last)
    return ColoredGraph(colors, edges)  # type: ignore[arg-type]


def format_graph(g: ColoredGraph) -> str:
    out = [f"p bcs {g.n} {g.m}"]
    out.extend(f"v {v} {c.token}" for v, c in enumerate(g.colors))
    out.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_solution(text: str | bytes) -> list[int]:
    """Vertex ids listed in a solution file (colors are attached by the caller)."""
    size = None
    ids: list[int] = []
    last = 0
    for lineno, parts in _lines(text):
        last = lineno
        if size is None:
            if parts[0] != "s" or len(parts) != 2:
                raise GraphFormatError("solution must start with 's <size>'", lineno)
            size = _int(parts[1], lineno, "solution size")
            continue
        if parts[0] != "l" or len(parts) != 2:
            raise GraphFormatError("expected 'l <id>'", lineno)
        ids.append(_int(parts[1], lineno, "vertex id"))
    if size is None:
        raise GraphFormatError("missing 's <size>' line", last or None)
    if size != len(ids):
        raise GraphFormatError(f"declared size {size} but {len(ids)} vertices listed", last)
    return ids


def format_solution(s: Solution) -> str:
    out = [f"s {s.size}"]
    out.extend(f"l {v}" for v in s.vertices)
    return "\n".join(out) + "\n"


@dataclass
class PlainGraph:
    """Uncolored graph with the optional Steiner terminal set and budget."""

    n: int
    edges: list[tuple[int, int]]
    terminals: list[int] = field(default_factory=list)
    budget: int | None = None


def parse_plain_graph(text: str | bytes) -> PlainGraph:
    n = m = -1
    edges: set[tuple[int, int]] = set()
    terminals: list[int] = []
    budget = None
    last = 0
    for lineno, parts in _lines(text):
        last = lineno
        if n < 0:
            n, m = _header(parts, lineno, "st")
            continue
        tag = parts[0]
        if tag == "e":
            _edge(parts, lineno, n, edges)
        elif tag == "t":
            if len(parts) != 2:
                raise GraphFormatError("malformed terminal line, expected 't <id>'", lineno)
            t = _int(parts[1], lineno, "terminal id")
            if not 0 <= t < n:
                raise GraphFormatError(f"terminal {t} out of range 0..{n - 1}", lineno)
            if t in terminals:
                raise GraphFormatError(f"duplicate terminal {t}", lineno)
            terminals.append(t)
        elif tag == "k":
            if len(parts) != 2:
                raise GraphFormatError("malformed budget line, expected 'k <budget>'", lineno)
            if budget is not None:
                raise GraphFormatError("duplicate budget line", lineno)
            budget = _int(parts[1], lineno, "budget")
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n < 0:
        raise GraphFormatError("missing 'p st <n> <m>' header", last or None)
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} 'e' lines found", last)
    return PlainGraph(n, sorted(edges), terminals, budget)


def format_plain_graph(pg: PlainGraph) -> str:
    out = [f"p st {pg.n} {len(pg.edges)}"]
    out.extend(f"e {u} {v}" for u, v in sorted(pg.edges))
    out.extend(f"t {t}" for t in pg.terminals)
    if pg.budget is not None:
        out.append(f"k {pg.budget}")
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> ColoredGraph:
    return parse_graph(Path(path).read_bytes())


def write_graph(g: ColoredGraph, path: str | Path) -> None:
    Path(path).write_bytes(format_graph(g).encode("ascii"))
