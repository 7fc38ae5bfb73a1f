"""Exhaustive universes of isomorphism classes under a size bound."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DomainError, ResourceError
from .graphs import CanonicalGraph, Graph, canonicalize

DEFAULT_CAP = 8
HARD_CAP = 12
CAP_ENV = "HOPFGRAPH_MAX_CAP"


def max_cap() -> int:
    """Enumeration cap: ``HOPFGRAPH_MAX_CAP`` if set, never above the hard limit."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError(f"{CAP_ENV} must be non-negative")
    if value > HARD_CAP:
        raise ResourceError(f"{CAP_ENV}={value} exceeds the hard limit {HARD_CAP}")
    return value


class BoundKind(enum.Enum):
    MaxVertices = "vertices"
    MaxEdges = "edges"


def sort_key(g: CanonicalGraph):
    return g.sort_key


@dataclass(frozen=True)
class GraphUniverse:
    bound_kind: BoundKind
    bound: int
    no_isolated: bool
    members: tuple[CanonicalGraph, ...]

    def __contains__(self, g) -> bool:
        return canonicalize(g) in self._index

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.members)

    def covers(self, n_vertices: int, n_edges: int, isolated: bool) -> bool:
        """Whether every class with at most ``n_vertices`` vertices and ``n_edges`` edges is present.

        With ``isolated=False`` only classes without isolated vertices are required.
        """
        if isolated and self.no_isolated:
            return False
        if self.bound_kind is BoundKind.MaxVertices:
            return self.bound >= n_vertices
        return not isolated and self.bound >= n_edges

    def with_at_most(self, *, vertices: int | None = None, edges: int | None = None):
        return tuple(
            g for g in self.members
            if (vertices is None or g.n_vertices <= vertices) and (edges is None or g.n_edges <= edges)
        )


def _check_bound(bound: int):
    if bound < 0:
        raise DomainError("bound must be non-negative")
    cap = max_cap()
    if bound > cap:
        raise ResourceError(f"bound {bound} exceeds the enumeration cap {cap} (set {CAP_ENV} to raise it)")


@lru_cache(maxsize=None)
def graphs_on(n: int) -> tuple[CanonicalGraph, ...]:
    """All classes with exactly ``n`` vertices, grown one vertex at a time."""
    if n == 0:
        return (canonicalize(Graph(0)),)
    out = set()
    for g in graphs_on(n - 1):
        new = n - 1
        for mask in range(1 << new):
            extra = tuple((u, new) for u in range(new) if mask >> u & 1)
            out.add(canonicalize(Graph._trusted(n, tuple(sorted(g.edges + extra)))))
    return tuple(sorted(out, key=sort_key))


@lru_cache(maxsize=None)
def graphs_with_edges(m: int) -> tuple[CanonicalGraph, ...]:
    """All classes with exactly ``m`` edges and no isolated vertices."""
    if m == 0:
        return (canonicalize(Graph(0)),)
    out = set()
    for g in graphs_with_edges(m - 1):
        n = g.n_vertices
        adj = g.adjacency
        present = set(g.edges)
        # new edge between existing vertices
        for u in range(n):
            for v in range(u + 1, n):
                if not adj[u] >> v & 1:
                    out.add(canonicalize(Graph._trusted(n, tuple(sorted(present | {(u, v)})))))
        # pendant edge to a new vertex
        for u in range(n):
            out.add(canonicalize(Graph._trusted(n + 1, tuple(sorted(present | {(u, n)})))))
        # disjoint new edge
        out.add(canonicalize(Graph._trusted(n + 2, tuple(sorted(present | {(n, n + 1)})))))
    return tuple(sorted(out, key=sort_key))


def enumerate_graphs(bound_kind: BoundKind, bound: int, no_isolated: bool = False) -> GraphUniverse:
    """Every isomorphism class within the bound, ordered by (edges, vertices, encoding).

    An edge bound only makes sense without isolated vertices (otherwise the
    class set is infinite), so ``MaxEdges`` requires ``no_isolated=True``.
    """
    bound_kind = BoundKind(bound_kind)
    _check_bound(bound)
    if bound_kind is BoundKind.MaxVertices:
        members = [g for n in range(bound + 1) for g in graphs_on(n)]
        if no_isolated:
            members = [g for g in members if not g.has_isolated_vertices]
    else:
        if not no_isolated:
            raise DomainError("an edge-bounded universe must exclude isolated vertices")
        members = [g for m in range(bound + 1) for g in graphs_with_edges(m)]
    return GraphUniverse(bound_kind, bound, no_isolated, tuple(sorted(members, key=sort_key)))
