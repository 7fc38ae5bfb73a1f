import random
from fractions import Fraction

import pytest

from hopfgraph.counting import (
    CountingMode,
    chen_combine,
    check_character,
    count,
    signature,
)
from hopfgraph.errors import DomainError
from hopfgraph.graphs import Graph, disjoint_union, named
from hopfgraph.linalg import Grading, Truncation
from hopfgraph.universe import BoundKind, enumerate_graphs
from examples import g, gs
from oracles import naive_edge_count, naive_morphisms, naive_vertex_count, random_graph

M = CountingMode


def test_edge_restricted_signature_of_k4():
    expected = gs((1, "e"), (6, "edge"), (12, "cherry"), (3, "edge,edge"), (4, "triangle"), (4, "threeStar"),
                  (12, "threePath"), (12, "paw"), (3, "C4"), (6, "diamond"), (1, "K4"))
    sig = signature(M.EdgeRestricted, named("K4"))
    assert sig.terms == expected
    assert sig.complete


def test_vertex_induced_signatures():
    assert signature(M.VertexInduced, named("K4")).terms == gs(
        (1, "e"), (4, "vertex"), (6, "edge"), (4, "triangle"), (1, "K4"))
    assert signature(M.VertexInduced, g("edge,vertex")).terms == gs(
        (1, "e"), (3, "vertex"), (1, "edge"), (2, "vertex,vertex"), (1, "edge,vertex"))


def test_homomorphism_signature_of_k4():
    sig = signature(M.Homomorphism, named("K4"), Truncation(Grading.VertexCount, 4))
    assert sig[named("edge")] == 12
    assert sig[named("cherry")] == 36
    assert sig[g("edge,edge")] == 144
    assert sig[g("vertex")] == 4
    with pytest.raises(DomainError):
        sig[g("edge,cherry")]


def test_counts_match_naive_oracles():
    rng = random.Random(9)
    patterns = [h for h in enumerate_graphs(BoundKind.MaxVertices, 4) if h.n_vertices > 0]
    for _ in range(8):
        sample = random_graph(rng, rng.randint(3, 6), 0.5)
        for p in patterns:
            assert count(M.VertexInduced, p, sample) == naive_vertex_count(p, sample)
            assert count(M.Homomorphism, p, sample) == naive_morphisms("hom", p, sample)
            if not p.has_isolated_vertices:
                assert count(M.EdgeRestricted, p, sample, strict=False) == naive_edge_count(p, sample)


def test_homomorphism_dp_divides_by_automorphisms():
    assert count(M.HomomorphismDP, named("cherry"), named("K4")) == Fraction(36, 2)


def test_edge_restricted_domain():
    with pytest.raises(DomainError):
        count(M.EdgeRestricted, Graph(3, [(0, 1)]), named("K4"))
    with pytest.raises(DomainError):
        count(M.EdgeRestricted, named("edge"), g("edge,vertex"))
    assert count(M.EdgeRestricted, named("edge"), g("edge,vertex"), strict=False) == 1
    assert signature(M.EdgeRestricted, g("edge,vertex"), strict=False).terms == gs((1, "e"), (1, "edge"))


def test_homomorphism_signature_needs_vertex_truncation():
    with pytest.raises(DomainError):
        signature(M.Homomorphism, named("K4"))
    with pytest.raises(DomainError):
        signature(M.Homomorphism, named("K4"), Truncation(Grading.EdgeCount, 2))


@pytest.mark.parametrize("mode", list(M))
def test_character_property_on_small_cases(mode):
    pats = ["edge", "cherry", "edge,edge"] if mode is M.EdgeRestricted else ["vertex", "edge", "cherry", "edge,vertex"]
    for sample in ("K4", "paw", "C4"):
        for a in pats:
            for b in pats:
                check = check_character(mode, named(sample), g(a), g(b))
                assert check.equal, (mode, sample, a, b, check)


def test_truncated_signature_is_not_complete():
    sig = signature(M.EdgeRestricted, named("K4"), Truncation(Grading.EdgeCount, 2))
    assert not sig.complete
    assert sig[named("cherry")] == 12
    with pytest.raises(DomainError):
        sig[named("triangle")]


@pytest.mark.parametrize("mode", list(M))
def test_chen_identity_small(mode):
    a, b = named("triangle"), g("edge,vertex")
    both = disjoint_union(a, b)
    if mode in (M.Homomorphism, M.HomomorphismDP):
        t = Truncation(Grading.VertexCount, 3)
        sa, sb, direct = (signature(mode, x, t) for x in (a, b, both))
    else:
        strict = mode is not M.EdgeRestricted
        sa, sb, direct = (signature(mode, x, strict=strict) for x in (a, b, both))
    combined = chen_combine(mode, sa, sb)
    assert combined.truncation.apply(combined.terms) == combined.truncation.apply(direct.terms)
    if mode in (M.EdgeRestricted, M.VertexInduced):
        assert combined.complete and combined.terms == direct.terms


def test_chen_rejects_mixed_modes():
    with pytest.raises(DomainError):
        chen_combine(M.VertexInduced, signature(M.VertexInduced, named("edge")),
                     signature(M.EdgeRestricted, named("edge")))
