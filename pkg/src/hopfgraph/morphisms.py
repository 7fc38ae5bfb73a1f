"""Counting graph homomorphisms by class.

A homomorphism ``sigma -> tau`` maps vertices to vertices so that edges go to
edges. The classes refine that condition:

* ``Mono``: injective on vertices.
* ``Epi``: surjective on vertices.
* ``RegEpi``: surjective on vertices and on edges.
* ``RegMono``: injective, and non-edges go to non-edges (an induced embedding).
* ``Iso``: bijective with an inverse homomorphism.
* ``MonoAndEpi``: bijective on vertices (edges may be added).

Everything is counted by backtracking over vertex assignments; the explicit
maps are only produced by :func:`iter_morphisms`.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import DomainError
from .graphs import (
    CanonicalGraph,
    Graph,
    canonicalize,
    induced_subgraph,
    restricted_subgraph,
)


class MorphismClass(enum.Enum):
    Hom = "hom"
    Mono = "mono"
    Epi = "epi"
    RegEpi = "regepi"
    RegMono = "regmono"
    Iso = "iso"
    MonoAndEpi = "monoepi"


_INJECTIVE = {MorphismClass.Mono, MorphismClass.RegMono, MorphismClass.Iso, MorphismClass.MonoAndEpi}
_SURJECTIVE = {MorphismClass.Epi, MorphismClass.RegEpi, MorphismClass.Iso, MorphismClass.MonoAndEpi}
_INDUCED = {MorphismClass.RegMono, MorphismClass.Iso}


def _impossible(cls: MorphismClass, src: Graph, dst: Graph) -> bool:
    n, N = src.n_vertices, dst.n_vertices
    if cls in _INJECTIVE and n > N:
        return True
    if cls in _SURJECTIVE and n < N:
        return True
    if cls is MorphismClass.Iso and src.n_edges != dst.n_edges:
        return True
    if cls in (MorphismClass.Mono, MorphismClass.RegMono, MorphismClass.MonoAndEpi) and src.n_edges > dst.n_edges:
        return True
    if cls is MorphismClass.RegEpi and src.n_edges < dst.n_edges:
        return True
    return False


def _search_order(adj: tuple[int, ...]) -> list[int]:
    # Prefer vertices with many already-placed neighbours so adjacency prunes early.
    n = len(adj)
    order: list[int] = []
    placed = 0
    while len(order) < n:
        v = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: ((adj[v] & placed).bit_count(), adj[v].bit_count(), -v),
        )
        order.append(v)
        placed |= 1 << v
    return order


class _Search:
    def __init__(self, cls: MorphismClass, src: Graph, dst: Graph):
        self.cls = cls
        self.n = src.n_vertices
        self.N = dst.n_vertices
        self.dadj = dst.adjacency
        self.dst_edges = dst.n_edges
        self.all_dst = (1 << self.N) - 1
        sadj = src.adjacency
        self.order = _search_order(sadj)
        pos = {v: i for i, v in enumerate(self.order)}
        self.nbrs = []
        self.non_nbrs = []
        for i, v in enumerate(self.order):
            earlier = [j for j in range(i)]
            self.nbrs.append([j for j in earlier if sadj[v] >> self.order[j] & 1])
            self.non_nbrs.append([j for j in earlier if not sadj[v] >> self.order[j] & 1])
        self.src_edges_pos = [(pos[u], pos[v]) for u, v in src.edges]
        self.injective = cls in _INJECTIVE
        self.surjective = cls in _SURJECTIVE
        self.induced = cls in _INDUCED
        # Degree filters: images of injective maps need at least the source degree.
        ddeg = [a.bit_count() for a in self.dadj]
        self.allowed = []
        for v in self.order:
            d = sadj[v].bit_count()
            m = self.all_dst
            if cls is MorphismClass.Iso:
                m = sum(1 << w for w in range(self.N) if ddeg[w] == d)
            elif self.injective:
                m = sum(1 << w for w in range(self.N) if ddeg[w] >= d)
            self.allowed.append(m)
        self.img = [0] * self.n

    def candidates(self, i: int, used: int) -> int:
        cand = self.allowed[i]
        img, dadj = self.img, self.dadj
        for j in self.nbrs[i]:
            cand &= dadj[img[j]]
        if self.injective:
            cand &= ~used
        if self.induced:
            for j in self.non_nbrs[i]:
                cand &= ~dadj[img[j]]
        return cand

    def leaf_ok(self, used: int) -> bool:
        if self.surjective and used != self.all_dst:
            return False
        if self.cls is MorphismClass.RegEpi:
            img = self.img
            hit = {(img[a], img[b]) if img[a] < img[b] else (img[b], img[a]) for a, b in self.src_edges_pos}
            return len(hit) == self.dst_edges
        return True

    def count(self) -> int:
        plain_leaf = not self.surjective and self.cls is not MorphismClass.RegEpi
        n = self.n

        def rec(i: int, used: int) -> int:
            if i == n:
                return 1 if self.leaf_ok(used) else 0
            if self.surjective and (self.all_dst & ~used).bit_count() > n - i:
                return 0
            cand = self.candidates(i, used)
            if plain_leaf and i == n - 1:
                return cand.bit_count()
            total = 0
            while cand:
                low = cand & -cand
                self.img[i] = low.bit_length() - 1
                total += rec(i + 1, used | low)
                cand ^= low
            return total

        return rec(0, 0)

    def maps(self) -> Iterator[tuple[int, ...]]:
        n = self.n
        inverse_order = [0] * n
        for i, v in enumerate(self.order):
            inverse_order[v] = i

        def rec(i: int, used: int):
            if i == n:
                if self.leaf_ok(used):
                    yield tuple(self.img[inverse_order[v]] for v in range(n))
                return
            if self.surjective and (self.all_dst & ~used).bit_count() > n - i:
                return
            cand = self.candidates(i, used)
            while cand:
                low = cand & -cand
                self.img[i] = low.bit_length() - 1
                yield from rec(i + 1, used | low)
                cand ^= low

        return rec(0, 0)


@lru_cache(maxsize=1 << 16)
def count_morphisms(cls: MorphismClass, src: Graph, dst: Graph) -> int:
    """Number of morphisms of class ``cls`` from ``src`` to ``dst``."""
    if _impossible(cls, src, dst):
        return 0
    return _Search(cls, src, dst).count()


def iter_morphisms(cls: MorphismClass, src: Graph, dst: Graph) -> Iterator[tuple[int, ...]]:
    """Yield each morphism as the tuple of images ``(phi(0), ..., phi(n-1))``."""
    if _impossible(cls, src, dst):
        return iter(())
    return _Search(cls, src, dst).maps()


# ---------------------------------------------------------------------------
# factorization identities


@dataclass
class FactorizationItem:
    label: str
    # per class sigma: (direct count over enumerated morphisms, product formula)
    rows: dict[CanonicalGraph, tuple[Fraction, Fraction]] = field(default_factory=dict)
    applicable: bool = True
    note: str = ""

    @property
    def holds(self) -> bool:
        return all(a == b for a, b in self.rows.values())


@dataclass
class FactorizationReport:
    pattern: CanonicalGraph
    sample: CanonicalGraph
    items: list[FactorizationItem]

    @property
    def holds(self) -> bool:
        return all(item.holds for item in self.items)


def _aut(g: Graph) -> int:
    return count_morphisms(MorphismClass.Iso, g, g)


def _tally(maps, sample: Graph, by_edges: bool, src: Graph) -> Counter:
    tally: Counter = Counter()
    for phi in maps:
        if by_edges:
            image = restricted_subgraph(sample, {tuple(sorted((phi[u], phi[v]))) for u, v in src.edges})
        else:
            image = induced_subgraph(sample, set(phi))
        tally[canonicalize(image)] += 1
    return tally


def check_factorization_identities(tau: Graph, sample: Graph, universe) -> FactorizationReport:
    """Check the four image-factorization counts of morphisms ``tau -> sample``.

    For each item the morphisms on the left are grouped by the isomorphism type
    ``sigma`` of their image, and each group size is compared with the product
    ``|A(tau, sigma)| * |B(sigma, sample)| / |Aut(sigma)|``:

    (i)   injective maps, induced image:     A = Mono∩Epi, B = RegMono
    (ii)  vertex-surjective maps, edge image: A = RegEpi,   B = Mono∩Epi
    (iii) all homomorphisms, induced image:  A = Epi,      B = RegMono
    (iv)  all homomorphisms, edge image:     A = RegEpi,   B = Mono

    Items (ii) and (iv) group by the subgraph spanned by the image edges, so
    they are only meaningful when ``tau`` has no isolated vertices.
    """
    M = MorphismClass
    n, m = tau.n_vertices, tau.n_edges
    if not universe.covers(n_vertices=n, n_edges=m, isolated=True):
        raise DomainError(
            f"universe does not contain every graph with at most {n} vertices"
        )
    members = list(universe.members)
    small = [s for s in members if s.n_vertices <= n]
    items = []

    def build(label, src_cls, by_edges, first, second, candidates):
        item = FactorizationItem(label)
        tally = _tally(iter_morphisms(src_cls, tau, sample), sample, by_edges, tau)
        for sigma in set(tally) - set(candidates):
            raise DomainError(f"image class {sigma.encoding} missing from the universe")
        for sigma in candidates:
            rhs = Fraction(count_morphisms(first, tau, sigma) * count_morphisms(second, sigma, sample), _aut(sigma))
            lhs = Fraction(tally.get(sigma, 0))
            if lhs or rhs:
                item.rows[sigma] = (lhs, rhs)
        return item

    same_size = [s for s in small if s.n_vertices == n]
    items.append(build("i", M.Mono, False, M.MonoAndEpi, M.RegMono, same_size))

    no_iso = not tau.has_isolated_vertices
    covered = [s for s in small if not s.has_isolated_vertices and s.n_edges <= m]
    if no_iso:
        items.append(build("ii", M.Epi, True, M.RegEpi, M.MonoAndEpi, covered))
    else:
        items.append(FactorizationItem("ii", applicable=False, note="pattern has isolated vertices"))

    items.append(build("iii", M.Hom, False, M.Epi, M.RegMono, small))

    if no_iso:
        items.append(build("iv", M.Hom, True, M.RegEpi, M.Mono, covered))
    else:
        items.append(FactorizationItem("iv", applicable=False, note="pattern has isolated vertices"))
    return FactorizationReport(canonicalize(tau), canonicalize(sample), items)
