import pytest
import sympy

from hopfgraph.basis import (
    PINNED_THREE_EDGE_BASIS,
    basis_matrix,
    check_counting_polynomial,
    counting_polynomial,
    decompose_connected,
    default_basis,
    invert_matrix,
)
from hopfgraph.counting import CountingMode, count
from hopfgraph.errors import DomainError, InternalError
from hopfgraph.graphs import Graph, named
from hopfgraph.linalg import GraphSum
from hopfgraph.products import ProductKind
from hopfgraph.universe import BoundKind, enumerate_graphs
from examples import FORWARD, INVERSE, g

P = ProductKind
SAMPLES = enumerate_graphs(BoundKind.MaxVertices, 5)

def _rows(m):
    return [[m[i, j] for j in range(len(m.basis))] for i in range(len(m.basis))]


def test_three_edge_matrices():
    fwd, inv = basis_matrix(3)
    assert tuple(b.encoding for b in fwd.basis) == PINNED_THREE_EDGE_BASIS
    assert _rows(fwd) == FORWARD
    assert _rows(inv) == INVERSE


def test_default_order_is_the_pinned_order():
    assert tuple(b.encoding for b in default_basis(3)) == PINNED_THREE_EDGE_BASIS
    fwd, _ = basis_matrix(3, basis=reversed(default_basis(3)))
    assert fwd.basis[0].encoding == "E@Q?"


@pytest.mark.parametrize("kind", [P.EdgeQuasiShuffle, P.EdgeShuffle, P.DisjointUnion])
def test_inverse_against_sympy(kind):
    fwd, inv = basis_matrix(4, kind)
    expected = sympy.Matrix(_rows(fwd)).inv()
    n = len(fwd.basis)
    assert all(sympy.Rational(inv[i, j].numerator, inv[i, j].denominator) == expected[i, j]
               for i in range(n) for j in range(n))


def test_one_edge_matrix_is_identity():
    fwd, inv = basis_matrix(1)
    assert _rows(fwd) == _rows(inv) == [[1, 0], [0, 1]]


def test_singular_matrix_raises():
    with pytest.raises(InternalError):
        invert_matrix([[1, 2], [2, 4]])


def test_decomposition_examples():
    poly = decompose_connected(g("edge,edge"))
    assert poly.evaluate() == GraphSum.of(g("edge,edge"))
    assert str(poly) == "-1/2·edge - 1·cherry + 1/2·edge^2"
    poly = decompose_connected(g("edge,cherry"))
    expected = {
        (named("cherry"),): -2, (named("triangle"),): -3, (named("threeStar"),): -3,
        (named("threePath"),): -2,
    }
    for m, c in expected.items():
        assert poly.terms[m] == c
    assert poly.terms[tuple(sorted((named("edge"), named("cherry")), key=lambda x: x.sort_key))] == 1
    assert len(poly.terms) == 5


@pytest.mark.parametrize("kind", list(P))
def test_decompositions_round_trip(kind):
    if kind.on_edges:
        graphs = enumerate_graphs(BoundKind.MaxEdges, 4, no_isolated=True)
    else:
        graphs = enumerate_graphs(BoundKind.MaxVertices, 5)
    for h in graphs:
        poly = decompose_connected(h, kind)
        assert poly.evaluate() == GraphSum.of(h)
        assert all(f.is_connected() for f in poly.factors())


def test_edge_products_reject_isolated_vertices():
    with pytest.raises(DomainError):
        decompose_connected(Graph(3, [(0, 1)]), P.EdgeQuasiShuffle)


@pytest.mark.parametrize("mode", list(CountingMode))
def test_counting_polynomials_on_small_samples(mode):
    if mode is CountingMode.EdgeRestricted:
        patterns = enumerate_graphs(BoundKind.MaxEdges, 3, no_isolated=True)
    else:
        patterns = enumerate_graphs(BoundKind.MaxVertices, 3)
    for pattern in patterns:
        for sample in SAMPLES:
            direct, via_poly = check_counting_polynomial(pattern, mode, sample)
            assert direct == via_poly, (pattern.encoding, sample.encoding)


def test_two_disjoint_edges_in_k4():
    k4 = named("K4")
    poly = counting_polynomial(g("edge,edge"), CountingMode.EdgeRestricted)
    values = {f: count(CountingMode.EdgeRestricted, f, k4) for f in poly.factors()}
    assert poly.evaluate_at(values) == 3 == count(CountingMode.EdgeRestricted, g("edge,edge"), k4)
