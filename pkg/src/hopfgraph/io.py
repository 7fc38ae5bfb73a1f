"""Reading and writing graphs as graph6 or as a plain edge list.

Edge-list text has one ``u v`` pair per line. A header line ``n=<k>`` fixes
the vertex count so isolated vertices survive; without it the vertex count is
one more than the largest endpoint. ``#`` starts a comment.
"""
from __future__ import annotations

from . import graph6
from .errors import DomainError, ParseError
from .graphs import Graph

FORMATS = ("graph6", "edgelist")


def _parse_edgelist(text: str) -> Graph:
    declared = None
    edges = []
    max_vertex = -1
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("n="):
            if declared is not None or edges:
                raise ParseError("the n=<k> header must come first and only once", lineno, col)
            value = stripped[2:].strip()
            if not value.isdigit():
                raise ParseError(f"bad vertex count {value!r}", lineno, col + 2)
            declared = int(value)
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex indices, found {len(parts)} fields", lineno, col)
        pair = []
        offset = col
        for part in parts:
            offset = line.index(part, offset - 1) + 1
            if not part.isdigit():
                raise ParseError(f"vertex {part!r} is not a non-negative integer", lineno, offset)
            pair.append(int(part))
        u, v = pair
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, col)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno, col)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v)} outside the declared n={declared}", lineno, col)
        seen.add(key)
        edges.append(key)
        max_vertex = max(max_vertex, u, v)
    n = declared if declared is not None else max_vertex + 1
    return Graph(n, tuple(edges))


def parse_graph(text: str, format: str = "graph6") -> Graph:
    """Parse ``text`` in the given format; malformed input raises :class:`ParseError`."""
    if format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(lines)}", 1, 1)
        n, edges = graph6.decode(lines[0])
        return Graph(n, edges)
    if format == "edgelist":
        return _parse_edgelist(text)
    raise DomainError(f"unknown graph format {format!r}; expected one of {FORMATS}")


def emit_graph(g: Graph, format: str = "graph6") -> str:
    if format == "graph6":
        return graph6.encode(g.n_vertices, g.edges) + "\n"
    if format == "edgelist":
        lines = [f"n={g.n_vertices}"] + [f"{u} {v}" for u, v in g.edges]
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown graph format {format!r}; expected one of {FORMATS}")


def guess_format(path: str) -> str:
    lower = path.lower()
    if lower.endswith((".g6", ".graph6")):
        return "graph6"
    return "edgelist"
