import pytest

from hopfgraph.coproducts import CoproductKind, coproduct, coproduct_sum, reduced_coproduct
from hopfgraph.errors import DomainError, ResourceError
from hopfgraph.graphs import Graph, canonicalize, named
from hopfgraph.linalg import EMPTY, GraphSum, TensorSum
from hopfgraph.universe import BoundKind, enumerate_graphs
from examples import COPRODUCT_EXAMPLES, g, gs
from oracles import from_key, naive_coproduct

EDGE_UNIVERSE = enumerate_graphs(BoundKind.MaxEdges, 4, no_isolated=True)
VERTEX_UNIVERSE = enumerate_graphs(BoundKind.MaxVertices, 4)


def _oracle(kind: CoproductKind, graph) -> TensorSum:
    return TensorSum({(from_key(a), from_key(b)): c for (a, b), c in naive_coproduct(kind.value, graph).items()})


@pytest.mark.parametrize("kind, graph, expected", COPRODUCT_EXAMPLES,
                         ids=[f"{k.value}-{x}" for k, x, _ in COPRODUCT_EXAMPLES])
def test_worked_examples(kind, graph, expected):
    assert coproduct(kind, g(graph)) == expected


@pytest.mark.parametrize("kind", [CoproductKind.EdgeShuffle, CoproductKind.EdgeQuasiShuffle, CoproductKind.Overlap])
def test_edge_coproducts_match_subset_oracle(kind):
    for graph in EDGE_UNIVERSE.with_at_most(vertices=6):
        assert coproduct(kind, graph) == _oracle(kind, graph), graph


@pytest.mark.parametrize("kind", [CoproductKind.VertexShuffle, CoproductKind.VertexQuasiShuffle])
def test_vertex_coproducts_match_subset_oracle(kind):
    for graph in VERTEX_UNIVERSE:
        assert coproduct(kind, graph) == _oracle(kind, graph), graph


def test_quasi_shuffle_splits_into_shuffle_and_overlap():
    for graph in EDGE_UNIVERSE:
        assert coproduct(CoproductKind.EdgeQuasiShuffle, graph) == (
            coproduct(CoproductKind.EdgeShuffle, graph) + coproduct(CoproductKind.Overlap, graph)
        )


def test_component_coproducts_on_repeated_components():
    x = g("edge,edge,cherry")
    dp = coproduct(CoproductKind.DividedPowers, x)
    assert dp[(g("edge"), g("edge,cherry"))] == 2
    assert dp[(g("edge,edge"), g("cherry"))] == 1
    assert coproduct(CoproductKind.DisjointUnion, x)[(g("edge"), g("edge,cherry"))] == 1
    assert len(coproduct(CoproductKind.DisjointUnion, x)) == 6


@pytest.mark.parametrize("kind", list(CoproductKind))
def test_counit_property(kind):
    # (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
    universe = EDGE_UNIVERSE if kind.on_edges else VERTEX_UNIVERSE
    for graph in universe:
        d = coproduct(kind, graph)
        left = GraphSum({b: c for (a, b), c in d.items() if a == EMPTY})
        right = GraphSum({a: c for (a, b), c in d.items() if b == EMPTY})
        if kind is CoproductKind.Overlap:
            # overlapping covers never put the empty edge set on either side
            assert not left and not right
        else:
            assert left == right == GraphSum.of(graph)


def test_connected_graphs_are_primitive_for_component_coproducts():
    for name in ("edge", "cherry", "K4", "vertex"):
        assert reduced_coproduct(CoproductKind.DividedPowers, named(name)) == 0
        assert reduced_coproduct(CoproductKind.DisjointUnion, named(name)) == 0
    assert reduced_coproduct(CoproductKind.EdgeQuasiShuffle, named("edge")) == TensorSum(
        {(named("edge"), named("edge")): 1})


def test_linear_extension():
    x = gs((2, "edge"), (-1, "cherry"))
    assert coproduct_sum(CoproductKind.EdgeShuffle, x) == (
        2 * coproduct(CoproductKind.EdgeShuffle, named("edge")) - coproduct(CoproductKind.EdgeShuffle, named("cherry"))
    )


def test_domain_and_resource_errors():
    with pytest.raises(DomainError):
        coproduct(CoproductKind.EdgeQuasiShuffle, Graph(3, [(0, 1)]))
    with pytest.raises(DomainError):
        reduced_coproduct(CoproductKind.DisjointUnion, EMPTY)
    big = canonicalize(Graph(7, [(u, v) for u in range(7) for v in range(u + 1, 7)]))
    with pytest.raises(ResourceError):
        coproduct(CoproductKind.EdgeQuasiShuffle, big)
