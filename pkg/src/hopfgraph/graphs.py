"""Labeled finite simple graphs and their isomorphism classes.

A :class:`Graph` is a concrete labeled graph on ``0..n-1``. Isolated vertices
are explicit: ``n_vertices`` may exceed the number of vertices covered by
edges. :func:`canonicalize` maps a graph to the :class:`CanonicalGraph`
representative of its isomorphism class; canonical graphs are the keys of
every formal sum in the package.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from . import graph6
from .errors import DomainError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on the vertex set ``{0, ..., n_vertices - 1}``."""

    n_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        n = self.n_vertices
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"vertex count must be a non-negative integer, got {n!r}")
        normalized = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            u, v = (u, v) if u < v else (v, u)
            if u < 0 or v >= n:
                raise DomainError(f"edge {e} has an endpoint outside 0..{n - 1}")
            normalized.append((u, v))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise DomainError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[Edge, ...]):
        # Skips validation; callers guarantee sorted (u < v) edges without repeats.
        g = object.__new__(cls)
        object.__setattr__(g, "n_vertices", n)
        object.__setattr__(g, "edges", edges)
        return g

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks: bit ``w`` of ``adjacency[v]`` is set iff ``{v, w}`` is an edge."""
        adj = [0] * self.n_vertices
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.adjacency) if not a)

    @property
    def has_isolated_vertices(self) -> bool:
        return any(not a for a in self.adjacency)

    def is_connected(self) -> bool:
        """True for graphs with exactly one connected component (the empty graph is not connected)."""
        return len(_component_masks(self)) == 1

    def __str__(self):
        return f"Graph(n={self.n_vertices}, edges={list(self.edges)})"


class CanonicalGraph(Graph):
    """Representative of an isomorphism class, produced only by :func:`canonicalize`."""

    @cached_property
    def encoding(self) -> str:
        """graph6 string of the canonical labeling."""
        return graph6.encode(self.n_vertices, self.edges)

    @property
    def sort_key(self) -> tuple[int, int, str]:
        return (self.n_edges, self.n_vertices, self.encoding)

    def __repr__(self):
        return f"CanonicalGraph({self.encoding!r})"


# ---------------------------------------------------------------------------
# canonical labeling


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; sub-cells are ordered by their neighbour counts into each cell."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        if not split:
            return out
        cells = out


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    mu, mv = adj[u] & ~(1 << v), adj[v] & ~(1 << u)
    return mu == mv


def _canonical_order(n: int, adj: tuple[int, ...]) -> list[int]:
    """Vertex order whose relabeled adjacency rows are lexicographically minimal.

    Individualize-refine search over the cells of the equitable partition.
    Within the cell being individualized, only one vertex per class of twins is
    tried: swapping twins is an automorphism fixing the current partition, so
    their subtrees yield the same leaf codes.
    """
    best_code = None
    best_order: list[int] = []

    def leaf(cells):
        nonlocal best_code, best_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            row = 0
            a = adj[v]
            while a:
                low = a & -a
                row |= 1 << pos[low.bit_length() - 1]
                a ^= low
            code.append(row)
        code = tuple(code)
        if best_code is None or code < best_code:
            best_code, best_order = code, order

    def search(cells):
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            leaf(cells)
            return
        reps: list[int] = []
        for v in cell:
            if not any(_twins(adj, r, v) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [w for w in cell if w != v]
            search(_refine(adj, cells[:i] + [[v], rest] + cells[i + 1:]))

    if n:
        search(_refine(adj, [list(range(n))]))
    return best_order


@lru_cache(maxsize=1 << 18)
def _canonical_from_edges(n: int, edges: tuple[Edge, ...]) -> CanonicalGraph:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    order = _canonical_order(n, tuple(adj))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    relabeled = []
    for u, v in edges:
        a, b = pos[u], pos[v]
        relabeled.append((a, b) if a < b else (b, a))
    relabeled.sort()
    return CanonicalGraph._trusted(n, tuple(relabeled))


def canonicalize(g: Graph) -> CanonicalGraph:
    """Canonical representative of the isomorphism class of ``g``."""
    if isinstance(g, CanonicalGraph):
        return g
    return _canonical_from_edges(g.n_vertices, g.edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return canonicalize(g) == canonicalize(h)


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by backtracking over adjacency-preserving bijections."""
    from .morphisms import MorphismClass, count_morphisms

    return count_morphisms(MorphismClass.Iso, g, g)


# ---------------------------------------------------------------------------
# subgraphs and unions


def relabel(g: Graph, perm) -> Graph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n_vertices)):
        raise DomainError("relabel needs a permutation of the vertex set")
    return Graph(g.n_vertices, tuple((perm[u], perm[v]) for u, v in g.edges))


def _compress(vertices: Iterable[int], edges: Iterable[Edge]) -> Graph:
    index = {v: i for i, v in enumerate(sorted(vertices))}
    new = sorted((index[u], index[v]) for u, v in edges)
    return Graph._trusted(len(index), tuple(new))


def restricted_subgraph(g: Graph, edge_subset: Iterable[Edge]) -> Graph:
    """Subgraph spanned by an edge subset: its vertices are exactly the covered endpoints."""
    chosen = set()
    present = set(g.edges)
    for u, v in edge_subset:
        e = (u, v) if u < v else (v, u)
        if e not in present:
            raise DomainError(f"edge {e} is not an edge of the graph")
        chosen.add(e)
    vertices = {x for e in chosen for x in e}
    return _compress(vertices, chosen)


def induced_subgraph(g: Graph, vertex_subset: Iterable[int]) -> Graph:
    """Subgraph induced on a vertex subset, relabeled to ``0..|U|-1`` in increasing order."""
    us = set(vertex_subset)
    for v in us:
        if not 0 <= v < g.n_vertices:
            raise DomainError(f"vertex {v} outside 0..{g.n_vertices - 1}")
    return _compress(us, (e for e in g.edges if e[0] in us and e[1] in us))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    k = g.n_vertices
    return Graph._trusted(k + h.n_vertices, g.edges + tuple((u + k, v + k) for u, v in h.edges))


def _component_masks(g: Graph) -> list[int]:
    adj = g.adjacency
    seen = 0
    comps = []
    for s in range(g.n_vertices):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def component_vertex_sets(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    return [[v for v in range(g.n_vertices) if m >> v & 1] for m in _component_masks(g)]


def connected_components(g: Graph) -> Counter:
    """Connected components of ``g`` as a multiset of canonical graphs."""
    return Counter(canonicalize(induced_subgraph(g, vs)) for vs in component_vertex_sets(g))


def union_of(parts: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for p in parts:
        out = disjoint_union(out, p)
    return out


# ---------------------------------------------------------------------------
# small named graphs, keyed by the names used on the command line

NAMED_GRAPHS: dict[str, Graph] = {
    "e": Graph(0),
    "vertex": Graph(1),
    "edge": Graph(2, ((0, 1),)),
    "cherry": Graph(3, ((0, 1), (1, 2))),
    "triangle": Graph(3, ((0, 1), (0, 2), (1, 2))),
    "threeStar": Graph(4, ((0, 1), (0, 2), (0, 3))),
    "threePath": Graph(4, ((0, 1), (1, 2), (2, 3))),
    "C4": Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "paw": Graph(4, ((0, 1), (0, 2), (1, 2), (2, 3))),
    "diamond": Graph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))),
    "K4": Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
}

ALIASES = {
    "empty": "e",
    "tria": "triangle",
    "threeLadder": "threePath",
    "tailedTriangle": "paw",
    "flaskA": "paw",
    "cyclefour": "C4",
    "diam": "diamond",
    "Kfour": "K4",
}


def named(name: str) -> CanonicalGraph:
    """Canonical graph for one of the named small graphs (aliases accepted)."""
    key = ALIASES.get(name, name)
    try:
        return canonicalize(NAMED_GRAPHS[key])
    except KeyError:
        raise DomainError(f"unknown graph name {name!r}") from None


@lru_cache(maxsize=None)
def _names_by_class() -> dict[CanonicalGraph, str]:
    return {canonicalize(g): name for name, g in NAMED_GRAPHS.items()}


def graph_name(g: Graph) -> str:
    """Readable name: named graphs by name, unions as ``a⊔b``, anything else by graph6."""
    c = canonicalize(g)
    names = _names_by_class()
    if c in names:
        return names[c]
    comps = connected_components(c)
    if len(comps) > 1 or sum(comps.values()) > 1:
        parts = []
        for comp in sorted(comps, key=lambda k: k.sort_key):
            parts.extend([graph_name(comp)] * comps[comp])
        return "⊔".join(parts)
    return f"[{c.encoding}]"
