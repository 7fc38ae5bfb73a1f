"""Products on graph classes, each dual to one coproduct.

The coefficient of ``γ`` in ``g · h`` is the coefficient of ``g ⊗ h`` in
``Δ(γ)`` for the dual coproduct. Candidate graphs ``γ`` come from gluing
``g`` and ``h`` (:func:`enumerate_gluings`); a candidate whose coefficient is
zero simply drops out, so the support may be generous.

Disjoint union and divided powers skip the gluing step: ``g ⊔ h`` is the only
candidate, with coefficient 1 for ⊔ and ``|Aut(g⊔h)| / (|Aut g| |Aut h|)``
for divided powers.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .coproducts import CoproductKind
from .errors import DomainError, ResourceError
from .graphs import CanonicalGraph, Graph, automorphism_count, canonicalize, disjoint_union
from .linalg import GraphSum, unit

MAX_CROSS_EDGES = 20
MAX_GLUING_VERTICES = 14


class ProductKind(enum.Enum):
    DisjointUnion = "disjoint"
    DividedPowers = "dp"
    EdgeShuffle = "shuffle"
    EdgeQuasiShuffle = "qs"
    VertexShuffle = "is"
    VertexQuasiShuffle = "qis"

    @property
    def dual(self) -> CoproductKind:
        return CoproductKind(self.value)

    @property
    def on_edges(self) -> bool:
        return self in (ProductKind.EdgeShuffle, ProductKind.EdgeQuasiShuffle)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    ProductKind.DisjointUnion: "⊔",
    ProductKind.DividedPowers: "·DP",
    ProductKind.EdgeShuffle: "⧢",
    ProductKind.EdgeQuasiShuffle: "⊛",
    ProductKind.VertexShuffle: "is",
    ProductKind.VertexQuasiShuffle: "qis",
}


def _check_operands(kind: ProductKind, g: Graph, h: Graph):
    if kind.on_edges and (g.has_isolated_vertices or h.has_isolated_vertices):
        raise DomainError(f"{kind.symbol} is defined only for graphs without isolated vertices")


# ---------------------------------------------------------------------------
# support


def _glue(g: Graph, h: Graph, src: tuple, dst: tuple, cross: tuple = ()) -> CanonicalGraph:
    """Quotient of g⊔h identifying ``src[i]`` in g with ``dst[i]`` in h, plus extra edges."""
    n = g.n_vertices
    where = {}
    nxt = n
    ident = dict(zip(dst, src))
    for t in range(h.n_vertices):
        if t in ident:
            where[t] = ident[t]
        else:
            where[t] = nxt
            nxt += 1
    edges = set(g.edges)
    for u, v in h.edges:
        a, b = where[u], where[v]
        edges.add((a, b) if a < b else (b, a))
    for u, t in cross:
        a, b = u, where[t]
        edges.add((a, b) if a < b else (b, a))
    return canonicalize(Graph._trusted(nxt, tuple(sorted(edges))))


def _partial_injections(n: int, N: int):
    for k in range(min(n, N) + 1):
        for src in combinations(range(n), k):
            for dst in permutations(range(N), k):
                yield src, dst


def enumerate_gluings(kind: ProductKind, g: Graph, h: Graph) -> frozenset:
    """Graphs that may appear in ``g · h`` (a superset of the support)."""
    kind = ProductKind(kind)
    _check_operands(kind, g, h)
    return _gluings(kind, canonicalize(g), canonicalize(h))


@lru_cache(maxsize=1 << 14)
def _gluings(kind: ProductKind, g: CanonicalGraph, h: CanonicalGraph) -> frozenset:
    n, N = g.n_vertices, h.n_vertices
    if kind in (ProductKind.DisjointUnion, ProductKind.DividedPowers) or n == 0 or N == 0:
        return frozenset({canonicalize(disjoint_union(g, h))})
    if n + N > MAX_GLUING_VERTICES:
        raise ResourceError(f"gluing {n} and {N} vertices exceeds the cap of {MAX_GLUING_VERTICES}")
    out = set()
    if kind.on_edges:
        for src, dst in _partial_injections(n, N):
            out.add(_glue(g, h, src, dst))
        return frozenset(out)
    maps = [((), ())] if kind is ProductKind.VertexShuffle else _partial_injections(n, N)
    for src, dst in maps:
        if kind is ProductKind.VertexQuasiShuffle and not all(
            g.has_edge(src[i], src[j]) == h.has_edge(dst[i], dst[j])
            for i in range(len(src)) for j in range(i + 1, len(src))
        ):
            continue
        g_only = [u for u in range(n) if u not in src]
        h_only = [t for t in range(N) if t not in dst]
        pairs = [(u, t) for u in g_only for t in h_only]
        if len(pairs) > MAX_CROSS_EDGES:
            raise ResourceError(f"{len(pairs)} optional cross edges exceed the cap of {MAX_CROSS_EDGES}")
        for mask in range(1 << len(pairs)):
            out.add(_glue(g, h, src, dst, tuple(p for i, p in enumerate(pairs) if mask >> i & 1)))
    return frozenset(out)


# ---------------------------------------------------------------------------
# coefficients


def _restrict_edges(edges: tuple, idx) -> CanonicalGraph:
    chosen = [edges[i] for i in idx]
    vs = sorted({x for e in chosen for x in e})
    index = {v: i for i, v in enumerate(vs)}
    return canonicalize(Graph._trusted(len(vs), tuple(sorted((index[u], index[v]) for u, v in chosen))))


def _induce(gamma: Graph, vs) -> CanonicalGraph:
    index = {v: i for i, v in enumerate(sorted(vs))}
    sub = tuple((index[u], index[v]) for u, v in gamma.edges if u in index and v in index)
    return canonicalize(Graph._trusted(len(index), sub))


@lru_cache(maxsize=1 << 16)
def section_coefficient(kind: CoproductKind, g: CanonicalGraph, h: CanonicalGraph, gamma: CanonicalGraph) -> int:
    """Coefficient of ``g ⊗ h`` in ``Δ_kind(γ)`` for the subset-based coproducts.

    Only subsets of the sizes forced by ``g`` and ``h`` are visited.
    """
    if kind in (CoproductKind.EdgeShuffle, CoproductKind.EdgeQuasiShuffle, CoproductKind.Overlap):
        items, size, a_size, b_size = gamma.edges, gamma.n_edges, g.n_edges, h.n_edges
        sub = lambda idx: _restrict_edges(gamma.edges, idx)  # noqa: E731
    else:
        items, size, a_size, b_size = range(gamma.n_vertices), gamma.n_vertices, g.n_vertices, h.n_vertices
        sub = lambda idx: _induce(gamma, idx)  # noqa: E731
    shuffle = kind in (CoproductKind.EdgeShuffle, CoproductKind.VertexShuffle)
    overlap = b_size - (size - a_size)  # |A ∩ B| forced by the sizes
    if overlap < 0 or overlap > a_size or (shuffle and overlap != 0):
        return 0
    if kind is CoproductKind.Overlap and overlap == 0:
        return 0
    everything = range(len(items))
    total = 0
    for a in combinations(everything, a_size):
        if sub(a) != g:
            continue
        a_set = set(a)
        rest = tuple(i for i in everything if i not in a_set)
        for extra in combinations(a, overlap):
            if sub(tuple(sorted(rest + extra))) == h:
                total += 1
    return total


def _dp_coefficient(g: CanonicalGraph, h: CanonicalGraph) -> Fraction:
    return Fraction(automorphism_count(disjoint_union(g, h)), automorphism_count(g) * automorphism_count(h))


@lru_cache(maxsize=1 << 14)
def _product_basis(kind: ProductKind, g: CanonicalGraph, h: CanonicalGraph) -> GraphSum:
    if kind is ProductKind.DisjointUnion:
        return GraphSum.of(disjoint_union(g, h))
    if kind is ProductKind.DividedPowers:
        return GraphSum.of(disjoint_union(g, h), _dp_coefficient(g, h))
    dual = kind.dual
    terms = {}
    for gamma in _gluings(kind, g, h):
        c = section_coefficient(dual, g, h, gamma)
        if c:
            terms[gamma] = c
    return GraphSum(terms)


def _as_sum(x) -> GraphSum:
    if isinstance(x, GraphSum):
        return x
    if isinstance(x, Graph):
        return GraphSum.of(x)
    raise TypeError(f"expected a Graph or GraphSum, got {type(x).__name__}")


def product(kind: ProductKind, x, y) -> GraphSum:
    """Bilinear product of two graphs or formal sums."""
    kind = ProductKind(kind)
    x, y = _as_sum(x), _as_sum(y)
    out = GraphSum()
    for g, c in x.items():
        for h, d in y.items():
            _check_operands(kind, g, h)
            out = out + (c * d) * _product_basis(kind, g, h)
    return out


def product_many(kind: ProductKind, factors) -> GraphSum:
    """Product of an iterable of graphs or sums; the empty product is the unit."""
    out = unit()
    for f in factors:
        out = product(kind, out, f)
    return out
