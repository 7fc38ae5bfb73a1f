import random

import pytest

from hopfgraph.errors import DomainError
from hopfgraph.graphs import Graph, named, union_of
from hopfgraph.morphisms import MorphismClass, check_factorization_identities, count_morphisms, iter_morphisms
from hopfgraph.universe import BoundKind, enumerate_graphs
from oracles import naive_morphisms, random_graph

CLASS_NAMES = {
    MorphismClass.Hom: "hom",
    MorphismClass.Mono: "mono",
    MorphismClass.Epi: "epi",
    MorphismClass.RegEpi: "regepi",
    MorphismClass.RegMono: "regmono",
    MorphismClass.Iso: "iso",
    MorphismClass.MonoAndEpi: "monoepi",
}

SMALL = ["vertex", "edge", "cherry", "triangle", "threeStar", "threePath", "C4", "paw"]


@pytest.mark.parametrize("cls", list(MorphismClass))
def test_counts_match_exhaustive_maps(cls):
    for a in SMALL:
        for b in SMALL + ["diamond", "K4"]:
            src, dst = named(a), named(b)
            assert count_morphisms(cls, src, dst) == naive_morphisms(CLASS_NAMES[cls], src, dst), (a, b)


def test_counts_on_random_pairs():
    rng = random.Random(5)
    for _ in range(40):
        src = random_graph(rng, rng.randint(1, 4), 0.5)
        dst = random_graph(rng, rng.randint(1, 5), 0.6)
        for cls, name in CLASS_NAMES.items():
            assert count_morphisms(cls, src, dst) == naive_morphisms(name, src, dst)


def test_known_values():
    k4 = named("K4")
    assert count_morphisms(MorphismClass.Hom, named("cherry"), k4) == 36
    assert count_morphisms(MorphismClass.Mono, named("edge"), k4) == 12
    assert count_morphisms(MorphismClass.RegEpi, named("cherry"), named("edge")) == 2
    assert count_morphisms(MorphismClass.Iso, union_of([named("cherry"), named("edge")]),
                           union_of([named("edge"), named("cherry")])) == 4


def test_iter_morphisms_yields_distinct_valid_maps():
    src, dst = named("cherry"), named("C4")
    maps = list(iter_morphisms(MorphismClass.Hom, src, dst))
    assert len(maps) == len(set(maps)) == count_morphisms(MorphismClass.Hom, src, dst)
    for f in maps:
        assert all(dst.has_edge(f[u], f[v]) for u, v in src.edges)


def test_empty_graph_maps():
    e = Graph(0)
    assert count_morphisms(MorphismClass.Hom, e, named("K4")) == 1
    assert count_morphisms(MorphismClass.Iso, e, e) == 1
    assert count_morphisms(MorphismClass.Epi, e, named("vertex")) == 0


def test_factorization_example_in_k4():
    ee = union_of([named("edge"), named("edge")])
    universe = enumerate_graphs(BoundKind.MaxVertices, 4)
    report = check_factorization_identities(ee, named("K4"), universe)
    assert report.holds
    item = next(i for i in report.items if i.label == "iv")
    assert sum(lhs for lhs, _ in item.rows.values()) == 144
    assert sorted(lhs for lhs, _ in item.rows.values() if lhs) == [24, 24, 96]


def test_edge_image_items_skip_isolated_patterns():
    universe = enumerate_graphs(BoundKind.MaxVertices, 4)
    report = check_factorization_identities(Graph(3, [(0, 1)]), named("paw"), universe)
    assert report.holds
    assert [i.applicable for i in report.items] == [True, False, True, False]


def test_factorization_needs_a_covering_universe():
    with pytest.raises(DomainError):
        check_factorization_identities(named("K4"), named("K4"), enumerate_graphs(BoundKind.MaxVertices, 3))
