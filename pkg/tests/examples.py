"""Worked product, coproduct and change-of-basis examples, written out term by term."""
from fractions import Fraction as F

from hopfgraph.coproducts import CoproductKind
from hopfgraph.graphs import canonicalize, named, union_of
from hopfgraph.linalg import GraphSum, TensorSum
from hopfgraph.products import ProductKind


def g(names: str):
    """``"edge"`` or a union such as ``"edge,cherry"``."""
    return canonicalize(union_of(named(p) for p in names.split(",")))


def gs(*terms) -> GraphSum:
    return GraphSum({g(name): c for c, name in terms})


def ts(*terms) -> TensorSum:
    return TensorSum({(g(a), g(b)): c for c, a, b in terms})


P, C = ProductKind, CoproductKind

PRODUCT_EXAMPLES = [
    (P.EdgeShuffle, "edge", "edge", gs((2, "edge,edge"), (2, "cherry"))),
    (P.EdgeShuffle, "edge", "cherry", gs((1, "edge,cherry"), (3, "triangle"), (3, "threeStar"), (2, "threePath"))),
    (P.EdgeQuasiShuffle, "edge", "edge", gs((2, "edge,edge"), (2, "cherry"), (1, "edge"))),
    (P.EdgeQuasiShuffle, "edge", "cherry",
     gs((1, "edge,cherry"), (3, "triangle"), (3, "threeStar"), (2, "threePath"), (2, "cherry"))),
    (P.DividedPowers, "edge", "edge", gs((2, "edge,edge"))),
    (P.VertexShuffle, "vertex", "vertex", gs((2, "vertex,vertex"), (2, "edge"))),
    (P.VertexShuffle, "edge", "edge",
     gs((2, "edge,edge"), (2, "threePath"), (2, "paw"), (4, "C4"), (4, "diamond"), (6, "K4"))),
    (P.VertexQuasiShuffle, "vertex", "vertex", gs((2, "vertex,vertex"), (2, "edge"), (1, "vertex"))),
    (P.VertexQuasiShuffle, "edge", "edge",
     gs((2, "edge,edge"), (2, "threePath"), (2, "paw"), (4, "C4"), (4, "diamond"), (6, "K4"),
        (1, "edge"), (2, "cherry"), (6, "triangle"))),
]

COPRODUCT_EXAMPLES = [
    (C.DisjointUnion, "edge", ts((1, "e", "edge"), (1, "edge", "e"))),
    (C.DisjointUnion, "edge,edge", ts((1, "e", "edge,edge"), (1, "edge", "edge"), (1, "edge,edge", "e"))),
    (C.DisjointUnion, "edge,cherry",
     ts((1, "e", "edge,cherry"), (1, "edge", "cherry"), (1, "cherry", "edge"), (1, "edge,cherry", "e"))),
    (C.DividedPowers, "edge", ts((1, "e", "edge"), (1, "edge", "e"))),
    (C.DividedPowers, "edge,edge", ts((1, "e", "edge,edge"), (2, "edge", "edge"), (1, "edge,edge", "e"))),
    (C.EdgeShuffle, "edge", ts((1, "edge", "e"), (1, "e", "edge"))),
    (C.EdgeShuffle, "cherry", ts((1, "cherry", "e"), (1, "e", "cherry"), (2, "edge", "edge"))),
    (C.EdgeQuasiShuffle, "edge", ts((1, "edge", "e"), (1, "e", "edge"), (1, "edge", "edge"))),
    (C.EdgeQuasiShuffle, "cherry",
     ts((1, "cherry", "e"), (1, "e", "cherry"), (2, "edge", "edge"), (2, "cherry", "edge"), (2, "edge", "cherry"),
        (1, "cherry", "cherry"))),
    (C.VertexShuffle, "vertex", ts((1, "vertex", "e"), (1, "e", "vertex"))),
    (C.VertexShuffle, "edge", ts((1, "edge", "e"), (1, "e", "edge"), (2, "vertex", "vertex"))),
    (C.VertexQuasiShuffle, "vertex", ts((1, "vertex", "e"), (1, "e", "vertex"), (1, "vertex", "vertex"))),
    (C.VertexQuasiShuffle, "edge",
     ts((1, "edge", "e"), (1, "e", "edge"), (2, "vertex", "vertex"), (1, "edge", "edge"), (2, "vertex", "edge"),
        (2, "edge", "vertex"))),
]

# graph expansions of component products over e, edge, cherry, edge², triangle,
# threeStar, threePath, cherry·edge, edge³ (column j is basis[j])
FORWARD = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 1],
    [0, 0, 1, 2, 0, 0, 0, 2, 6],
    [0, 0, 0, 2, 0, 0, 0, 0, 6],
    [0, 0, 0, 0, 1, 0, 0, 3, 6],
    [0, 0, 0, 0, 0, 1, 0, 3, 6],
    [0, 0, 0, 0, 0, 0, 1, 2, 6],
    [0, 0, 0, 0, 0, 0, 0, 1, 6],
    [0, 0, 0, 0, 0, 0, 0, 0, 6],
]
INVERSE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, F(-1, 2), 0, 0, 0, 0, F(1, 3)],
    [0, 0, 1, -1, 0, 0, 0, -2, 2],
    [0, 0, 0, F(1, 2), 0, 0, 0, 0, F(-1, 2)],
    [0, 0, 0, 0, 1, 0, 0, -3, 2],
    [0, 0, 0, 0, 0, 1, 0, -3, 2],
    [0, 0, 0, 0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, F(1, 6)],
]
