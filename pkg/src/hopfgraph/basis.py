"""Expressing graphs as polynomials in connected graphs.

For every product here, ``g1 · g2`` with ``g1`` connected equals
``c·(g1 ⊔ g2)`` plus graphs with fewer components. Peeling off one component
at a time therefore writes any graph as a polynomial in connected graphs.
Since each counting mode is a character for its paired product, the same
polynomial expresses the count of ``g`` through counts of connected patterns.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .counting import CountingMode, count
from .errors import DomainError, InternalError
from .graphs import CanonicalGraph, Graph, canonicalize, connected_components, graph_name, union_of
from .linalg import EMPTY, GraphSum, format_coeff
from .products import ProductKind, product, product_many
from .universe import BoundKind, enumerate_graphs

Monomial = tuple  # sorted tuple of connected CanonicalGraph factors


def _monomial(factors) -> Monomial:
    return tuple(sorted(factors, key=lambda g: g.sort_key))


def _format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for g, k in sorted(Counter(m).items(), key=lambda kv: kv[0].sort_key):
        parts.append(graph_name(g) if k == 1 else f"{graph_name(g)}^{k}")
    return "·".join(parts)


@dataclass(frozen=True)
class ConnectedPolynomial:
    """Linear combination of products of connected graphs under ``product``."""

    product: ProductKind
    terms: dict  # Monomial -> Fraction

    def evaluate(self) -> GraphSum:
        """Multiply out every monomial and sum, giving back a graph sum."""
        out = GraphSum()
        for m, c in self.terms.items():
            out = out + c * product_many(self.product, m)
        return out

    def evaluate_at(self, values) -> Fraction:
        """Substitute a number for every connected factor (``values[g]``)."""
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for g in m:
                term *= values[g]
            total += term
        return total

    def factors(self) -> set:
        return {g for m in self.terms for g in m}

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), [g.sort_key for g in kv[0]]))

    def __str__(self):
        items = self.items()
        if not items:
            return "0"
        parts = []
        for i, (m, c) in enumerate(items):
            body = f"{format_coeff(abs(c))}·{_format_monomial(m)}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"factors": [g.encoding for g in m], "coeff": f"{c.numerator}/{c.denominator}"}
            for m, c in self.items()
        ]


def _add_scaled(acc: dict, terms: dict, scale: Fraction):
    for m, c in terms.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


def _multiply_by(terms: dict, g: CanonicalGraph) -> dict:
    return {_monomial(m + (g,)): c for m, c in terms.items()}


def _components_sorted(g: CanonicalGraph) -> list[CanonicalGraph]:
    comps = []
    for c, k in sorted(connected_components(g).items(), key=lambda kv: kv[0].sort_key):
        comps.extend([c] * k)
    return comps


@lru_cache(maxsize=1 << 12)
def _decompose(kind: ProductKind, g: CanonicalGraph) -> tuple:
    if g == EMPTY:
        return (((), Fraction(1)),)
    comps = _components_sorted(g)
    if len(comps) == 1:
        return (((g,), Fraction(1)),)
    first = comps[0]
    rest = canonicalize(union_of(comps[1:]))
    prod = product(kind, first, rest)
    lead = prod[g]
    if not lead:
        raise InternalError(f"{kind.symbol} product of the components of {g.encoding} misses the graph itself")
    n_comps = len(comps)
    terms = _multiply_by(dict(_decompose(kind, rest)), first)
    terms = {m: c / lead for m, c in terms.items()}
    for gamma, c in prod.items():
        if gamma == g:
            continue
        if len(_components_sorted(gamma)) >= n_comps:
            raise InternalError("correction term does not have fewer components; recursion would not descend")
        _add_scaled(terms, dict(_decompose(kind, gamma)), -c / lead)
    return tuple(terms.items())


def decompose_connected(g: Graph, product: ProductKind = ProductKind.EdgeQuasiShuffle) -> ConnectedPolynomial:
    """Write ``g`` as a polynomial in connected graphs for the given product."""
    kind = ProductKind(product)
    if kind.on_edges and g.has_isolated_vertices:
        raise DomainError(f"{kind.symbol} is defined only for graphs without isolated vertices")
    return ConnectedPolynomial(kind, dict(_decompose(kind, canonicalize(g))))


def counting_polynomial(g: Graph, mode: CountingMode) -> ConnectedPolynomial:
    """Counts of ``g`` as a polynomial in counts of connected patterns.

    Uses the product for which ``mode`` is multiplicative, so for every
    sample ``count(g) = poly.evaluate_at({σ: count(σ)})``.
    """
    return decompose_connected(g, CountingMode(mode).product)


def check_counting_polynomial(g: Graph, mode: CountingMode, sample: Graph) -> tuple[Fraction, Fraction]:
    """Direct count of ``g`` in ``sample`` and the value of its polynomial there."""
    mode = CountingMode(mode)
    poly = counting_polynomial(g, mode)
    values = {s: count(mode, s, sample, strict=False) for s in poly.factors()}
    return count(mode, g, sample, strict=False), poly.evaluate_at(values)


# ---------------------------------------------------------------------------
# change-of-basis matrices


def invert_matrix(rows) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise InternalError("change-of-basis matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class Direction(enum.Enum):
    MonomialToGraph = "forward"
    GraphToMonomial = "inverse"


@dataclass(frozen=True)
class BasisMatrix:
    """Square matrix indexed by ``basis`` on both sides.

    ``MonomialToGraph``: column ``j`` holds the graph expansion of the product
    of the components of ``basis[j]``. ``GraphToMonomial``: column ``j`` holds
    the coefficients of those component products in ``basis[j]``.
    """

    basis: tuple
    rows: tuple
    direction: Direction
    product: ProductKind

    def __getitem__(self, idx) -> Fraction:
        r, c = idx
        return self.rows[r][c]

    def format(self) -> str:
        names = [graph_name(g) for g in self.basis]
        cells = [[("_" if not x else format_coeff(x)) for x in row] for row in self.rows]
        width = max([len(s) for row in cells for s in row] + [1])
        label = max(len(s) for s in names)
        lines = [f"{'':{label}}  " + " ".join(f"{i:>{width}}" for i in range(len(names)))]
        for name, row in zip(names, cells):
            lines.append(f"{name:<{label}}  " + " ".join(f"{s:>{width}}" for s in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "direction": self.direction.name,
            "product": self.product.value,
            "basis": [g.encoding for g in self.basis],
            "rows": [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.rows],
        }


# Order of the 3-edge example basis: e, edge, cherry, edge², triangle,
# threeStar, threePath, cherry·edge, edge³.
PINNED_THREE_EDGE_BASIS = ("?", "A_", "BW", "CK", "Bw", "CF", "CL", "D@o", "E@Q?")


def default_basis(max_edges: int) -> tuple:
    """Graphs without isolated vertices up to ``max_edges`` edges, by (edges, vertices, graph6)."""
    universe = enumerate_graphs(BoundKind.MaxEdges, max_edges, no_isolated=True)
    return tuple(sorted(universe, key=lambda g: g.sort_key))


def basis_matrix(
    max_edges: int,
    product: ProductKind = ProductKind.EdgeQuasiShuffle,
    basis=None,
) -> tuple[BasisMatrix, BasisMatrix]:
    """Matrices between graphs and products of their connected components.

    Returns ``(forward, inverse)``. ``basis`` pins the row/column order; by
    default it is :func:`default_basis`.
    """
    kind = ProductKind(product)
    if basis is None:
        basis = default_basis(max_edges)
    basis = tuple(canonicalize(g) for g in basis)
    index = {g: i for i, g in enumerate(basis)}
    n = len(basis)
    forward = [[Fraction(0)] * n for _ in range(n)]
    for j, g in enumerate(basis):
        for gamma, c in product_many(kind, _components_sorted(g)).items():
            if gamma not in index:
                raise InternalError(f"product of components of {g.encoding} leaves the basis")
            forward[index[gamma]][j] = c
    inverse = invert_matrix(forward)
    return (
        BasisMatrix(basis, tuple(map(tuple, forward)), Direction.MonomialToGraph, kind),
        BasisMatrix(basis, tuple(map(tuple, inverse)), Direction.GraphToMonomial, kind),
    )
