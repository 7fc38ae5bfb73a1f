"""Exact computations in combinatorial Hopf algebras of finite simple graphs."""
from .basis import BasisMatrix, ConnectedPolynomial, basis_matrix, counting_polynomial, decompose_connected
from .coproducts import CoproductKind, coproduct, coproduct_sum, reduced_coproduct
from .counting import CountingMode, Signature, chen_combine, count, signature
from .errors import (
    DomainError,
    HopfGraphError,
    InternalError,
    ParseError,
    ResourceError,
    UnsupportedConfigError,
)
from .graphs import (
    CanonicalGraph,
    Graph,
    automorphism_count,
    canonicalize,
    connected_components,
    disjoint_union,
    graph_name,
    is_isomorphic,
    named,
)
from .hopf import (
    BialgebraConfig,
    Carrier,
    antipode,
    antipode_series,
    check_bialgebra,
    check_grading,
    check_hopf,
    find_hopf_config,
    is_primitive,
)
from .io import emit_graph, parse_graph
from .linalg import GraphSum, Grading, TensorSum, Truncation, format_sum
from .morphisms import MorphismClass, check_factorization_identities, count_morphisms
from .products import ProductKind, product, product_many
from .translate import TranslationKind, translate, translate_inverse
from .universe import BoundKind, GraphUniverse, enumerate_graphs

__all__ = [
    "antipode",
    "antipode_series",
    "automorphism_count",
    "basis_matrix",
    "BasisMatrix",
    "BialgebraConfig",
    "BoundKind",
    "CanonicalGraph",
    "canonicalize",
    "Carrier",
    "check_bialgebra",
    "check_factorization_identities",
    "check_grading",
    "check_hopf",
    "chen_combine",
    "connected_components",
    "ConnectedPolynomial",
    "coproduct",
    "coproduct_sum",
    "CoproductKind",
    "count",
    "count_morphisms",
    "counting_polynomial",
    "CountingMode",
    "decompose_connected",
    "disjoint_union",
    "DomainError",
    "emit_graph",
    "enumerate_graphs",
    "find_hopf_config",
    "format_sum",
    "Grading",
    "Graph",
    "graph_name",
    "GraphSum",
    "GraphUniverse",
    "HopfGraphError",
    "InternalError",
    "is_isomorphic",
    "is_primitive",
    "MorphismClass",
    "named",
    "parse_graph",
    "ParseError",
    "product",
    "product_many",
    "ProductKind",
    "reduced_coproduct",
    "ResourceError",
    "Signature",
    "signature",
    "TensorSum",
    "translate",
    "translate_inverse",
    "TranslationKind",
    "Truncation",
    "UnsupportedConfigError",
]

__version__ = "0.1.0"
