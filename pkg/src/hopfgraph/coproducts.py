"""Coproducts on graph classes.

Two coproducts split a graph along its connected components:

* ``DisjointUnion``: every split of the component multiset, coefficient 1.
* ``DividedPowers``: the same splits weighted by binomial coefficients, so
  that connected graphs are primitive and the map is multiplicative for ⊔.

The others split edge or vertex sets:

* ``EdgeShuffle``: ``g|A ⊗ g|(E∖A)`` over all edge subsets ``A``.
* ``EdgeQuasiShuffle``: ``g|A ⊗ g|B`` over all covers ``A ∪ B = E``.
* ``Overlap``: the covers with ``A ∩ B ≠ ∅`` (quasi-shuffle minus shuffle).
* ``VertexShuffle`` / ``VertexQuasiShuffle``: the induced-subgraph analogues
  over vertex partitions and vertex covers.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import comb

from .errors import DomainError, ResourceError
from .graphs import CanonicalGraph, Graph, canonicalize, connected_components, union_of
from .linalg import EMPTY, GraphSum, TensorSum

MAX_SUBSET_EDGES = 16
MAX_COVER_SIZE = 12
MAX_SUBSET_VERTICES = 12


class CoproductKind(enum.Enum):
    DisjointUnion = "disjoint"
    DividedPowers = "dp"
    EdgeShuffle = "shuffle"
    EdgeQuasiShuffle = "qs"
    VertexShuffle = "is"
    VertexQuasiShuffle = "qis"
    Overlap = "ol"

    @property
    def on_edges(self) -> bool:
        return self in (CoproductKind.EdgeShuffle, CoproductKind.EdgeQuasiShuffle, CoproductKind.Overlap)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    CoproductKind.DisjointUnion: "Δ⊔",
    CoproductKind.DividedPowers: "Δ_DP",
    CoproductKind.EdgeShuffle: "Δ⧢",
    CoproductKind.EdgeQuasiShuffle: "Δqs",
    CoproductKind.VertexShuffle: "Δis",
    CoproductKind.VertexQuasiShuffle: "Δqis",
    CoproductKind.Overlap: "Δol",
}


def _component_splits(g: CanonicalGraph, weighted: bool) -> TensorSum:
    comps = sorted(connected_components(g).items(), key=lambda kv: kv[0].sort_key)
    terms: dict = {}
    for split in cartesian(*(range(q + 1) for _, q in comps)):
        left = union_of(c for (c, _), p in zip(comps, split) for _ in range(p))
        right = union_of(c for (c, q), p in zip(comps, split) for _ in range(q - p))
        coeff = 1
        if weighted:
            for (_, q), p in zip(comps, split):
                coeff *= comb(q, p)
        key = (canonicalize(left), canonicalize(right))
        terms[key] = terms.get(key, 0) + Fraction(coeff)
    return TensorSum._raw(terms)


def _edge_subgraph_table(g: CanonicalGraph) -> list[CanonicalGraph]:
    """Canonical restricted subgraph for every edge bitmask."""
    edges = g.edges
    m = len(edges)
    table = []
    for mask in range(1 << m):
        chosen = [edges[i] for i in range(m) if mask >> i & 1]
        vs = sorted({x for e in chosen for x in e})
        index = {v: i for i, v in enumerate(vs)}
        table.append(canonicalize(Graph._trusted(len(vs), tuple(sorted((index[u], index[v]) for u, v in chosen)))))
    return table


def _vertex_subgraph_table(g: CanonicalGraph) -> list[CanonicalGraph]:
    n = g.n_vertices
    table = []
    for mask in range(1 << n):
        index = {}
        for v in range(n):
            if mask >> v & 1:
                index[v] = len(index)
        sub = tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index)
        table.append(canonicalize(Graph._trusted(len(index), sub)))
    return table


def _add(terms: dict, key, c=1):
    terms[key] = terms.get(key, 0) + c


def _subsets_of(mask: int):
    # every submask of mask, including 0 and mask itself
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _shuffle(table: list, k: int) -> TensorSum:
    full = (1 << k) - 1
    terms: dict = {}
    for a in range(1 << k):
        _add(terms, (table[a], table[full ^ a]))
    return TensorSum._raw({key: Fraction(c) for key, c in terms.items()})


def _quasi_shuffle(table: list, k: int, overlap_only: bool) -> TensorSum:
    full = (1 << k) - 1
    terms: dict = {}
    for a in range(1 << k):
        rest = full ^ a
        for extra in _subsets_of(a):
            if overlap_only and not extra:
                continue
            _add(terms, (table[a], table[rest | extra]))
    return TensorSum._raw({key: Fraction(c) for key, c in terms.items()})


def _check_domain(kind: CoproductKind, g: Graph):
    if kind.on_edges:
        if g.has_isolated_vertices:
            raise DomainError(f"{kind.symbol} is defined only for graphs without isolated vertices")
        limit = MAX_SUBSET_EDGES if kind is CoproductKind.EdgeShuffle else MAX_COVER_SIZE
        if g.n_edges > limit:
            raise ResourceError(f"{kind.symbol} on {g.n_edges} edges exceeds the cap of {limit}")
    elif kind in (CoproductKind.VertexShuffle, CoproductKind.VertexQuasiShuffle):
        limit = MAX_SUBSET_VERTICES if kind is CoproductKind.VertexShuffle else MAX_COVER_SIZE
        if g.n_vertices > limit:
            raise ResourceError(f"{kind.symbol} on {g.n_vertices} vertices exceeds the cap of {limit}")


@lru_cache(maxsize=1 << 14)
def _coproduct_canonical(kind: CoproductKind, g: CanonicalGraph) -> TensorSum:
    if kind is CoproductKind.DisjointUnion:
        return _component_splits(g, weighted=False)
    if kind is CoproductKind.DividedPowers:
        return _component_splits(g, weighted=True)
    if kind.on_edges:
        table = _edge_subgraph_table(g)
        if kind is CoproductKind.EdgeShuffle:
            return _shuffle(table, g.n_edges)
        return _quasi_shuffle(table, g.n_edges, overlap_only=kind is CoproductKind.Overlap)
    table = _vertex_subgraph_table(g)
    if kind is CoproductKind.VertexShuffle:
        return _shuffle(table, g.n_vertices)
    return _quasi_shuffle(table, g.n_vertices, overlap_only=False)


def coproduct(kind: CoproductKind, g: Graph) -> TensorSum:
    """Coproduct of a single graph class, as a 2-tensor of classes."""
    kind = CoproductKind(kind)
    _check_domain(kind, g)
    return _coproduct_canonical(kind, canonicalize(g))


def coproduct_sum(kind: CoproductKind, x: GraphSum) -> TensorSum:
    """Linear extension of :func:`coproduct` to formal sums."""
    out = TensorSum()
    for g, c in x.items():
        out = out + c * coproduct(kind, g)
    return out


def reduced_coproduct(kind: CoproductKind, g: Graph) -> TensorSum:
    """``Δ(g) - g⊗e - e⊗g`` for a non-empty graph ``g``."""
    c = canonicalize(g)
    if c == EMPTY:
        raise DomainError("the reduced coproduct is defined on non-empty graphs only")
    return coproduct(kind, c) - TensorSum({(c, EMPTY): 1, (EMPTY, c): 1})
