"""Slow, obviously-correct reference implementations used by the tests.

Nothing here calls the library's canonical form or morphism search; graphs
are compared through the minimum relabeled edge list over all permutations.
"""
from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, permutations, product

from hopfgraph.graphs import Graph, canonicalize


def perm_key(n: int, edges) -> tuple:
    """Lexicographically least sorted edge list over all relabelings."""
    edges = [tuple(e) for e in edges]
    best = None
    for p in permutations(range(n)):
        relabeled = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return (n, best or ())


def key_of(g: Graph) -> tuple:
    return perm_key(g.n_vertices, g.edges)


def from_key(key) -> Graph:
    n, edges = key
    return canonicalize(Graph(n, edges))


def all_labeled(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_classes(n: int) -> set:
    return {key_of(g) for g in all_labeled(n)}


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def adjacent(g: Graph, u: int, v: int) -> bool:
    return (min(u, v), max(u, v)) in set(g.edges)


# ---------------------------------------------------------------------------
# morphisms


def naive_morphisms(cls: str, src: Graph, dst: Graph) -> int:
    """Count maps V(src) -> V(dst) of the named class by trying every map."""
    n, N = src.n_vertices, dst.n_vertices
    dst_edges = set(dst.edges)
    total = 0
    for f in product(range(N), repeat=n):
        if not all((min(f[u], f[v]), max(f[u], f[v])) in dst_edges for u, v in src.edges if f[u] != f[v]):
            continue
        if any(f[u] == f[v] for u, v in src.edges):
            continue
        injective = len(set(f)) == n
        surjective = len(set(f)) == N
        image_edges = {tuple(sorted((f[u], f[v]))) for u, v in src.edges}
        induced = all(
            ((min(f[u], f[v]), max(f[u], f[v])) in dst_edges) == adjacent(src, u, v)
            for u, v in combinations(range(n), 2)
        )
        ok = {
            "hom": True,
            "mono": injective,
            "epi": surjective,
            "regepi": surjective and image_edges == dst_edges,
            "regmono": injective and induced,
            "iso": injective and surjective and induced,
            "monoepi": injective and surjective,
        }[cls]
        total += ok
    return total


def naive_aut(g: Graph) -> int:
    edges = set(g.edges)
    return sum(
        1 for p in permutations(range(g.n_vertices))
        if {tuple(sorted((p[u], p[v]))) for u, v in edges} == edges
    )


# ---------------------------------------------------------------------------
# subgraphs and coproducts


def restricted(g: Graph, chosen) -> tuple:
    vs = sorted({x for e in chosen for x in e})
    index = {v: i for i, v in enumerate(vs)}
    return perm_key(len(vs), [(index[u], index[v]) for u, v in chosen])


def induced(g: Graph, vs) -> tuple:
    index = {v: i for i, v in enumerate(sorted(vs))}
    return perm_key(len(index), [(index[u], index[v]) for u, v in g.edges if u in index and v in index])


def naive_coproduct(kind: str, g: Graph) -> Counter:
    """Coproduct as a Counter of (left key, right key) pairs."""
    out: Counter = Counter()
    if kind in ("shuffle", "qs", "ol"):
        items, sub = list(g.edges), lambda s: restricted(g, s)
    elif kind in ("is", "qis"):
        items, sub = list(range(g.n_vertices)), lambda s: induced(g, s)
    else:
        raise ValueError(kind)
    k = len(items)
    for a in product((0, 1), repeat=k):
        for b in product((0, 1), repeat=k):
            if not all(x or y for x, y in zip(a, b)):
                continue
            overlap = any(x and y for x, y in zip(a, b))
            if kind in ("shuffle", "is") and overlap:
                continue
            if kind == "ol" and not overlap:
                continue
            left = [items[i] for i in range(k) if a[i]]
            right = [items[i] for i in range(k) if b[i]]
            out[(sub(left), sub(right))] += 1
    return out


def naive_edge_count(pattern: Graph, sample: Graph) -> int:
    target = key_of(pattern)
    return sum(
        1 for chosen in combinations(sample.edges, pattern.n_edges) if restricted(sample, chosen) == target
    )


def naive_vertex_count(pattern: Graph, sample: Graph) -> int:
    target = key_of(pattern)
    return sum(1 for vs in combinations(range(sample.n_vertices), pattern.n_vertices) if induced(sample, vs) == target)


def naive_epimorphisms(tau: Graph, sigma: Graph) -> int:
    return naive_morphisms("epi", tau, sigma)
