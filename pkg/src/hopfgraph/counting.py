"""Subgraph counting functions and the signatures built from them.

Four ways to count a pattern ``τ`` inside a sample ``Λ``:

* ``EdgeRestricted``: edge subsets ``A`` of ``Λ`` whose spanned subgraph is ``≅ τ``.
* ``VertexInduced``: vertex subsets ``U`` of ``Λ`` whose induced subgraph is ``≅ τ``.
* ``Homomorphism``: ``|Hom(τ, Λ)|``.
* ``HomomorphismDP``: ``|Hom(τ, Λ)| / |Aut(τ)|``.

A :class:`Signature` collects the counts of all patterns up to a truncation.
Each mode is a character for one product (counts of a product are products
of counts), and signatures of a disjoint union of samples are determined by
the signatures of the parts (:func:`chen_combine`).
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DomainError, ResourceError
from .graphs import CanonicalGraph, Graph, automorphism_count, canonicalize, connected_components
from .linalg import GraphSum, Grading, Truncation, grade, pairing
from .morphisms import MorphismClass, count_morphisms
from .products import ProductKind, product
from .universe import BoundKind, enumerate_graphs

MAX_SUBSETS = 1 << 20


class CountingMode(enum.Enum):
    EdgeRestricted = "ei"
    VertexInduced = "vi"
    Homomorphism = "hom"
    HomomorphismDP = "homdp"

    @property
    def product(self) -> ProductKind:
        """The product for which this count is multiplicative."""
        return _PAIRED_PRODUCT[self]

    @property
    def union_product(self) -> ProductKind:
        """Product that combines signatures of two samples into that of their union."""
        return ProductKind.DividedPowers if self is CountingMode.Homomorphism else ProductKind.DisjointUnion


_PAIRED_PRODUCT = {
    CountingMode.EdgeRestricted: ProductKind.EdgeQuasiShuffle,
    CountingMode.VertexInduced: ProductKind.VertexQuasiShuffle,
    CountingMode.Homomorphism: ProductKind.DisjointUnion,
    CountingMode.HomomorphismDP: ProductKind.DividedPowers,
}


def _check_edge_domain(pattern: Graph | None, sample: Graph | None, strict: bool):
    if pattern is not None and pattern.has_isolated_vertices:
        raise DomainError("edge-restricted counting needs a pattern without isolated vertices")
    if strict and sample is not None and sample.has_isolated_vertices:
        raise DomainError(
            "edge-restricted counting needs a sample without isolated vertices (pass strict=False to ignore them)"
        )


def _restricted(edges, idx) -> CanonicalGraph:
    chosen = [edges[i] for i in idx]
    vs = sorted({x for e in chosen for x in e})
    index = {v: i for i, v in enumerate(vs)}
    return canonicalize(Graph._trusted(len(vs), tuple(sorted((index[u], index[v]) for u, v in chosen))))


def _induced(g: Graph, vs) -> CanonicalGraph:
    index = {v: i for i, v in enumerate(vs)}
    sub = tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return canonicalize(Graph._trusted(len(index), sub))


def _check_subsets(total: int):
    if total > MAX_SUBSETS:
        raise ResourceError(f"{total} subsets exceed the enumeration cap {MAX_SUBSETS}")


def count_edge_restricted(pattern: Graph, sample: Graph, strict: bool = True) -> int:
    _check_edge_domain(pattern, sample, strict)
    target = canonicalize(pattern)
    k, nv = target.n_edges, target.n_vertices
    degs = sorted(target.degrees())
    _check_subsets(comb(sample.n_edges, k))
    edges = sample.edges
    total = 0
    for idx in combinations(range(len(edges)), k):
        d: Counter = Counter()
        for i in idx:
            u, v = edges[i]
            d[u] += 1
            d[v] += 1
        if len(d) != nv or sorted(d.values()) != degs:
            continue
        if _restricted(edges, idx) == target:
            total += 1
    return total


def count_vertex_induced(pattern: Graph, sample: Graph) -> int:
    target = canonicalize(pattern)
    k, m = target.n_vertices, target.n_edges
    _check_subsets(comb(sample.n_vertices, k))
    adj = sample.adjacency
    total = 0
    for vs in combinations(range(sample.n_vertices), k):
        mask = sum(1 << v for v in vs)
        if sum((adj[v] & mask).bit_count() for v in vs) != 2 * m:
            continue
        if _induced(sample, vs) == target:
            total += 1
    return total


def count_homomorphisms(pattern: Graph, sample: Graph) -> int:
    """``|Hom(pattern, sample)|``, multiplied out over the pattern's components."""
    total = 1
    for comp, mult in connected_components(pattern).items():
        total *= count_morphisms(MorphismClass.Hom, comp, canonicalize(sample)) ** mult
    return total


def count(mode: CountingMode, pattern: Graph, sample: Graph, strict: bool = True) -> Fraction:
    """Count ``pattern`` inside ``sample`` in the given mode, as an exact rational."""
    mode = CountingMode(mode)
    if mode is CountingMode.EdgeRestricted:
        return Fraction(count_edge_restricted(pattern, sample, strict))
    if mode is CountingMode.VertexInduced:
        return Fraction(count_vertex_induced(pattern, sample))
    hom = count_homomorphisms(pattern, sample)
    if mode is CountingMode.Homomorphism:
        return Fraction(hom)
    return Fraction(hom, automorphism_count(pattern))


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class Signature:
    """Counts of every pattern within ``truncation`` inside ``sample``.

    ``sample`` is ``None`` for signatures assembled from parts without ever
    building the sample. ``complete`` means no pattern outside the truncation
    has a non-zero count.
    """

    mode: CountingMode
    sample: CanonicalGraph | None
    truncation: Truncation
    terms: GraphSum
    complete: bool = False

    def __getitem__(self, pattern: Graph) -> Fraction:
        if not self.complete and not self.truncation.admits(pattern):
            raise DomainError(
                f"pattern with {grade(pattern, self.truncation.grading)} "
                f"{self.truncation.grading.value} lies outside the truncation bound {self.truncation.bound}"
            )
        return self.terms[pattern]

    def pair(self, x: GraphSum) -> Fraction:
        """Evaluate the signature on a formal sum of patterns."""
        for g in x:
            self[g]  # raises when g is outside the truncation
        return pairing(self.terms, x)

    def truncate(self, truncation: Truncation) -> "Signature":
        if truncation.grading is self.truncation.grading and truncation.bound >= self.truncation.bound:
            return self
        return Signature(self.mode, self.sample, truncation, truncation.apply(self.terms), False)


def _natural_bound(mode: CountingMode, sample: Graph) -> tuple[Grading, int]:
    if mode is CountingMode.EdgeRestricted:
        return Grading.EdgeCount, sample.n_edges
    return Grading.VertexCount, sample.n_vertices


def _edge_tally(sample: Graph, max_size: int) -> Counter:
    edges = sample.edges
    sizes = range(min(max_size, len(edges)) + 1)
    _check_subsets(sum(comb(len(edges), k) for k in sizes))
    tally: Counter = Counter()
    for k in sizes:
        for idx in combinations(range(len(edges)), k):
            tally[_restricted(edges, idx)] += 1
    return tally


def _vertex_tally(sample: Graph, max_size: int) -> Counter:
    n = sample.n_vertices
    sizes = range(min(max_size, n) + 1)
    _check_subsets(sum(comb(n, k) for k in sizes))
    tally: Counter = Counter()
    for k in sizes:
        for vs in combinations(range(n), k):
            tally[_induced(sample, vs)] += 1
    return tally


def signature(
    mode: CountingMode,
    sample: Graph,
    truncation: Truncation | None = None,
    strict: bool = True,
) -> Signature:
    """Signature of ``sample``.

    For the subgraph modes the truncation defaults to the sample's own size,
    which gives the complete signature. Homomorphism signatures are infinite
    sums and always need an explicit vertex-count truncation.
    """
    mode = CountingMode(mode)
    sample = canonicalize(sample)
    if mode is CountingMode.EdgeRestricted:
        _check_edge_domain(None, sample, strict)
    if truncation is None:
        if mode in (CountingMode.Homomorphism, CountingMode.HomomorphismDP):
            raise DomainError("homomorphism signatures need an explicit truncation")
        truncation = Truncation(*_natural_bound(mode, sample))
    if mode in (CountingMode.EdgeRestricted, CountingMode.VertexInduced):
        nat_grading, nat_bound = _natural_bound(mode, sample)
        size_cap = truncation.bound if truncation.grading is nat_grading else nat_bound
        if mode is CountingMode.EdgeRestricted:
            tally = _edge_tally(sample, size_cap)
        else:
            tally = _vertex_tally(sample, size_cap)
        terms = truncation.apply(GraphSum(tally))
        complete = size_cap >= nat_bound and all(truncation.admits(g) for g in tally)
        return Signature(mode, sample, truncation, terms, complete)
    if truncation.grading is not Grading.VertexCount:
        raise DomainError("homomorphism signatures are truncated by vertex count")
    patterns = enumerate_graphs(BoundKind.MaxVertices, truncation.bound).members
    terms = GraphSum({p: count(mode, p, sample) for p in patterns})
    return Signature(mode, sample, truncation, terms, False)


def _effective_bound(a: Signature, b: Signature) -> tuple[Truncation, bool]:
    grading = a.truncation.grading
    if a.complete and b.complete:
        return Truncation(grading, a.truncation.bound + b.truncation.bound), True
    bounds = [s.truncation.bound for s in (a, b) if not s.complete]
    return Truncation(grading, min(bounds)), False


def chen_combine(mode: CountingMode, sig_a: Signature, sig_b: Signature) -> Signature:
    """Signature of the disjoint union of two samples, from the two signatures alone.

    A pattern is counted in ``Λ ⊔ Ψ`` by splitting its components between the
    two samples. In product form this is the ⊔ product of the signatures, or
    the divided-powers product for plain homomorphism counts.
    """
    mode = CountingMode(mode)
    if sig_a.mode is not mode or sig_b.mode is not mode:
        raise DomainError("signatures must share the requested counting mode")
    if sig_a.truncation.grading is not sig_b.truncation.grading:
        raise DomainError("signatures must be truncated by the same grading")
    if sig_a.truncation.grading is Grading.ConnectedComponents:
        raise DomainError("component-count truncations cannot be combined")
    truncation, complete = _effective_bound(sig_a, sig_b)
    combined = product(mode.union_product, sig_a.terms, sig_b.terms)
    return Signature(mode, None, truncation, truncation.apply(combined), complete)


# ---------------------------------------------------------------------------
# character property


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def count_sum(mode: CountingMode, x: GraphSum, sample: Graph, strict: bool = True) -> Fraction:
    """Linear extension of :func:`count` in the pattern argument."""
    return sum((c * count(mode, g, sample, strict) for g, c in x.items()), Fraction(0))


def check_character(
    mode: CountingMode, sample: Graph, tau1: Graph, tau2: Graph, strict: bool = True
) -> IdentityCheck:
    """Compare ``count(τ1)·count(τ2)`` with the count of the paired product ``τ1 · τ2``."""
    mode = CountingMode(mode)
    lhs = count(mode, tau1, sample, strict) * count(mode, tau2, sample, strict)
    rhs = count_sum(mode, product(mode.product, tau1, tau2), sample, strict)
    return IdentityCheck(lhs, rhs)
