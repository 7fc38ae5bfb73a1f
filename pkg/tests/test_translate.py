from fractions import Fraction
from math import factorial

import pytest
import sympy

from hopfgraph.errors import DomainError
from hopfgraph.graphs import Graph, automorphism_count, canonicalize, named
from hopfgraph.linalg import GraphSum
from hopfgraph.translate import (
    TranslationKind,
    check_translation_identity,
    epimorphism_count,
    independent_partitions,
    labeled_count,
    superset_counts,
    translate,
    translate_inverse,
)
from hopfgraph.universe import BoundKind, enumerate_graphs
from examples import g, gs
from oracles import naive_epimorphisms

T = TranslationKind
SMALL = enumerate_graphs(BoundKind.MaxVertices, 4, no_isolated=True)


def test_worked_examples():
    assert translate(T.ViFromEi, named("cherry")) == gs((1, "cherry"), (3, "triangle"))
    assert translate(T.EiFromHom, g("edge,edge")) == gs((4, "edge"), (8, "cherry"), (8, "edge,edge"))
    assert translate(T.ViFromHom, named("edge")) == gs((2, "edge"))
    assert translate(T.ViFromHom, named("cherry")) == gs((2, "edge"), (2, "cherry"), (6, "triangle"))
    assert translate(T.EiFromHom, Graph(0)) == GraphSum.of(Graph(0))


def test_numeric_identities_in_k4():
    check = check_translation_identity(T.ViFromEi, named("cherry"), named("K4"))
    assert check.lhs == check.rhs == 12
    check = check_translation_identity(T.EiFromHom, g("edge,edge"), named("K4"))
    assert check.lhs == check.rhs == 144


@pytest.mark.parametrize("kind", list(T))
def test_identities_on_small_samples(kind):
    for tau in enumerate_graphs(BoundKind.MaxEdges, 2, no_isolated=True):
        for sample in ("K4", "paw", "C4", "cherry"):
            assert check_translation_identity(kind, tau, named(sample)).equal


def test_vertex_images_are_epimorphism_counts():
    for tau in SMALL:
        image = translate(T.ViFromHom, tau)
        for sigma in SMALL:
            assert image[sigma] == naive_epimorphisms(tau, sigma)
            assert epimorphism_count(tau, sigma) == naive_epimorphisms(tau, sigma)


def _matrix(kind, basis):
    index = {b: i for i, b in enumerate(basis)}
    m = sympy.zeros(len(basis), len(basis))
    for j, b in enumerate(basis):
        for h, c in translate(kind, b).items():
            m[index[h], j] = sympy.Rational(c.numerator, c.denominator)
    return m


@pytest.mark.parametrize("kind", list(T))
def test_inverse_matches_sympy(kind):
    # graphs without isolated vertices on at most four vertices are closed under all three maps
    basis = list(SMALL)
    inv = _matrix(kind, basis).inv()
    for j, b in enumerate(basis):
        got = translate_inverse(kind, b)
        expected = {basis[i]: Fraction(int(inv[i, j].p), int(inv[i, j].q)) for i in range(len(basis)) if inv[i, j]}
        assert got.as_dict() == expected


@pytest.mark.parametrize("kind", list(T))
def test_round_trip_on_sums(kind):
    x = gs((2, "cherry"), (Fraction(-1, 3), "edge,edge"), (1, "triangle"))
    assert translate(kind, translate_inverse(kind, x)) == x
    assert translate_inverse(kind, translate(kind, x)) == x


def test_superset_methods_agree():
    for name in ("edge,edge,edge", "cherry", "edge,cherry"):
        h = g(name)
        assert superset_counts(h, "direct") == superset_counts(h, "lattice")


def test_lattice_labels_match_automorphisms():
    empty5 = canonicalize(Graph(5))
    counts = superset_counts(empty5, "lattice")
    for sigma, c in counts.items():
        assert c == factorial(5) // automorphism_count(sigma)
    assert sum(counts.values()) == 2 ** 10
    assert labeled_count(named("C4")) == 3


def test_independent_partitions_of_cherry():
    blocks = list(independent_partitions(named("cherry")))
    assert len(blocks) == 2  # discrete partition and merging the two leaves


def test_isolated_vertices_are_rejected():
    with pytest.raises(DomainError):
        translate(T.ViFromEi, Graph(3, [(0, 1)]))
    with pytest.raises(DomainError):
        translate_inverse(T.EiFromHom, Graph(1))
