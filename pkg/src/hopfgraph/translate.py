"""Maps converting pattern sums between counting modes.

``ViFromEi`` turns an edge-restricted pattern into vertex-induced patterns:
``τ ↦ Σ_σ |Mono∩Epi(τ,σ)| / |Aut τ| · σ`` where ``σ`` runs over graphs on the
vertex set of ``τ`` that contain all its edges.

``EiFromHom`` turns a homomorphism pattern into edge-restricted patterns:
``τ ↦ Σ_σ |RegEpi(τ,σ)| · σ`` over the quotients of ``τ`` by partitions of its
vertices into independent sets.

``ViFromHom`` is their composition. All three are triangular, so each has an
inverse computed by back-substitution.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError, InternalError
from .graphs import CanonicalGraph, Graph, automorphism_count, canonicalize, connected_components
from .counting import CountingMode, IdentityCheck, count, count_sum
from .linalg import GraphSum
from .morphisms import MorphismClass, count_morphisms

# Below this many missing edges the supersets of a graph are listed directly;
# above it the counts come from the one-edge augmentation lattice.
DIRECT_SUPERSET_LIMIT = 12
# From this many vertices on, labeled counts come from the lattice started at the
# edgeless graph instead of from automorphism groups.
LATTICE_LABELING_FROM = 8


class TranslationKind(enum.Enum):
    ViFromEi = "vi-ei"
    EiFromHom = "ei-hom"
    ViFromHom = "vi-hom"


def _check(g: Graph):
    if g.has_isolated_vertices:
        raise DomainError("translation maps are defined on graphs without isolated vertices")


# ---------------------------------------------------------------------------
# edge supersets


def _add_edge(g: CanonicalGraph, e) -> CanonicalGraph:
    return canonicalize(Graph._trusted(g.n_vertices, tuple(sorted(g.edges + (e,)))))


def _non_edges(g: Graph):
    adj = g.adjacency
    n = g.n_vertices
    return [(u, v) for u in range(n) for v in range(u + 1, n) if not adj[u] >> v & 1]


@lru_cache(maxsize=None)
def augmentations(g: CanonicalGraph) -> tuple[tuple[CanonicalGraph, int], ...]:
    """Classes reachable by adding one non-edge, with the number of non-edges reaching each."""
    out: dict = defaultdict(int)
    for e in _non_edges(g):
        out[_add_edge(g, e)] += 1
    return tuple(sorted(out.items(), key=lambda kv: kv[0].sort_key))


def _superset_counts_lattice(g: CanonicalGraph) -> dict[CanonicalGraph, int]:
    # N_j(σ') = Σ_σ N_{j-1}(σ) · mult(σ → σ') / j counts labeled supersets with j extra edges.
    counts = {g: 1}
    layer = {g: 1}
    j = 0
    while layer:
        j += 1
        nxt: dict = defaultdict(int)
        for sigma, c in layer.items():
            for child, mult in augmentations(sigma):
                nxt[child] += c * mult
        layer = {}
        for child, total in nxt.items():
            q, r = divmod(total, j)
            if r:
                raise InternalError("superset count not divisible; lattice is inconsistent")
            layer[child] = q
        counts.update(layer)
    return counts


def _superset_counts_direct(g: CanonicalGraph) -> dict[CanonicalGraph, int]:
    missing = _non_edges(g)
    counts: dict = defaultdict(int)
    for mask in range(1 << len(missing)):
        extra = tuple(missing[i] for i in range(len(missing)) if mask >> i & 1)
        counts[canonicalize(Graph._trusted(g.n_vertices, tuple(sorted(g.edges + extra))))] += 1
    return dict(counts)


@lru_cache(maxsize=1 << 12)
def superset_counts(g: CanonicalGraph, method: str = "auto") -> dict[CanonicalGraph, int]:
    """Number of edge sets ``S ⊇ E(g)`` on the vertices of ``g`` with ``(V(g), S) ≅ σ``, per class ``σ``."""
    if method == "auto":
        method = "direct" if len(_non_edges(g)) <= DIRECT_SUPERSET_LIMIT else "lattice"
    if method == "direct":
        return _superset_counts_direct(g)
    return _superset_counts_lattice(g)


@lru_cache(maxsize=None)
def labeled_count(g: CanonicalGraph) -> int:
    """Number of labeled graphs on ``V(g)`` isomorphic to ``g``, i.e. ``n! / |Aut g|``."""
    n = g.n_vertices
    if n < LATTICE_LABELING_FROM:
        return factorial(n) // automorphism_count(g)
    return superset_counts(canonicalize(Graph(n)), "lattice")[g]


@lru_cache(maxsize=1 << 12)
def _vi_from_ei_basis(tau: CanonicalGraph) -> GraphSum:
    # |Mono∩Epi(τ,σ)| = |Aut σ| · #supersets ≅ σ, and |Aut σ| / |Aut τ| = L(τ) / L(σ)
    counts = superset_counts(tau)
    lt = labeled_count(tau)
    return GraphSum({sigma: Fraction(c * lt, labeled_count(sigma)) for sigma, c in counts.items()})


# ---------------------------------------------------------------------------
# quotients


def independent_partitions(g: Graph):
    """Partitions of ``V(g)`` into independent sets, as block-index tuples (restricted growth strings)."""
    n = g.n_vertices
    adj = g.adjacency
    block_of = [0] * n
    masks: list[int] = []

    def rec(v: int):
        if v == n:
            yield tuple(block_of)
            return
        for b in range(len(masks)):
            if not adj[v] & masks[b]:
                block_of[v] = b
                masks[b] |= 1 << v
                yield from rec(v + 1)
                masks[b] ^= 1 << v
        block_of[v] = len(masks)
        masks.append(1 << v)
        yield from rec(v + 1)
        masks.pop()

    return rec(0)


def quotient(g: Graph, blocks: tuple[int, ...]) -> CanonicalGraph:
    k = max(blocks, default=-1) + 1
    edges = {tuple(sorted((blocks[u], blocks[v]))) for u, v in g.edges}
    return canonicalize(Graph._trusted(k, tuple(sorted(edges))))


@lru_cache(maxsize=1 << 12)
def _ei_from_hom_basis(tau: CanonicalGraph) -> GraphSum:
    tally: dict = defaultdict(int)
    for blocks in independent_partitions(tau):
        tally[quotient(tau, blocks)] += 1
    return GraphSum({sigma: c * automorphism_count(sigma) for sigma, c in tally.items()})


@lru_cache(maxsize=1 << 12)
def _vi_from_hom_basis(tau: CanonicalGraph) -> GraphSum:
    return _ei_from_hom_basis(tau).map_linear(_vi_from_ei_basis)


_BASIS = {
    TranslationKind.ViFromEi: _vi_from_ei_basis,
    TranslationKind.EiFromHom: _ei_from_hom_basis,
    TranslationKind.ViFromHom: _vi_from_hom_basis,
}


def _as_sum(x) -> GraphSum:
    return x if isinstance(x, GraphSum) else GraphSum.of(x)


def translate(kind: TranslationKind, x) -> GraphSum:
    kind = TranslationKind(kind)
    x = _as_sum(x)
    for g in x:
        _check(g)
    return x.map_linear(_BASIS[kind])


# ---------------------------------------------------------------------------
# inverses


def _inverse_order(kind: TranslationKind):
    # Processing order for back-substitution: each image's other terms come later.
    if kind is TranslationKind.ViFromEi:
        # images add edges on the same vertex set
        return lambda g: (g.n_edges, g.n_vertices, g.encoding)
    # images are quotients: fewer vertices, hence processed largest first
    return lambda g: (-g.n_vertices, g.n_edges, g.encoding)


def translate_inverse(kind: TranslationKind, x) -> GraphSum:
    """Solve ``translate(kind, y) = x`` for ``y`` by triangular back-substitution.

    Every image ``Φ(τ)`` is ``d_τ·τ`` plus terms strictly later in a fixed
    order (more edges on the same vertices, or fewer vertices), so the
    earliest remaining term of ``x`` determines the next term of ``y``.
    """
    kind = TranslationKind(kind)
    x = _as_sum(x)
    for g in x:
        _check(g)
    order = _inverse_order(kind)
    basis = _BASIS[kind]
    residual = x.as_dict()
    result: dict = {}
    while residual:
        g = min(residual, key=order)
        image = basis(g)
        diag = image[g]
        if not diag:
            raise InternalError(f"translation image of {g.encoding} lacks its diagonal term")
        coeff = residual[g] / diag
        result[g] = coeff
        for h, c in image.items():
            if h != g and order(h) < order(g):
                raise InternalError("translation image is not triangular in the processing order")
            v = residual.get(h, 0) - coeff * c
            if v:
                residual[h] = v
            else:
                residual.pop(h, None)
    return GraphSum(result)


# ---------------------------------------------------------------------------
# identity checks


def epimorphism_count(tau: Graph, sigma: Graph) -> int:
    """``|Epi(τ,σ)|`` by inclusion-exclusion over vertex subsets of ``σ``.

    ``Σ_{U ⊆ V(σ)} (-1)^{|V σ| - |U|} hom(τ, σ_U)``, with homomorphism counts
    multiplied out over the components of ``τ``.
    """
    comps = list(connected_components(tau).items())
    n = sigma.n_vertices
    adj = sigma.adjacency
    total = 0
    for mask in range(1 << n):
        vs = [v for v in range(n) if mask >> v & 1]
        index = {v: i for i, v in enumerate(vs)}
        sub = Graph._trusted(len(vs), tuple((index[u], index[w]) for u in vs for w in vs
                                            if u < w and adj[u] >> w & 1))
        homs = 1
        for comp, mult in comps:
            homs *= count_morphisms(MorphismClass.Hom, comp, sub) ** mult
            if not homs:
                break
        total += (-1) ** (n - len(vs)) * homs
    return total


def check_translation_identity(kind: TranslationKind, tau: Graph, sample: Graph):
    """Compare direct counts of ``τ`` in ``Λ`` with counts of the translated pattern.

    * ``ViFromEi``: edge-restricted count of τ vs vertex-induced count of Φ(τ).
    * ``EiFromHom``: homomorphism count of τ vs edge-restricted count of Φ(τ).
    * ``ViFromHom``: homomorphism count of τ vs vertex-induced count of Φ(τ).
    """
    kind = TranslationKind(kind)
    source, target = {
        TranslationKind.ViFromEi: (CountingMode.EdgeRestricted, CountingMode.VertexInduced),
        TranslationKind.EiFromHom: (CountingMode.Homomorphism, CountingMode.EdgeRestricted),
        TranslationKind.ViFromHom: (CountingMode.Homomorphism, CountingMode.VertexInduced),
    }[kind]
    lhs = count(source, tau, sample, strict=False)
    rhs = count_sum(target, translate(kind, tau), sample, strict=False)
    return IdentityCheck(lhs, rhs)
