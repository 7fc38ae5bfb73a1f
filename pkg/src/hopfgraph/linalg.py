"""Formal sums of graph classes with exact rational coefficients.

:class:`GraphSum` is an element of the free vector space on isomorphism
classes. The same type doubles as a (truncated) linear functional through
:func:`pairing`, where basis classes are orthonormal. :class:`TensorSum` holds
tensors of any arity, keyed by tuples of classes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DomainError
from .graphs import CanonicalGraph, Graph, canonicalize, connected_components, graph_name

Number = int | Fraction


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"coefficient must be an int, Fraction or 'p/q' string, got {value!r}")
    return Fraction(value)


class _FormalSum:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        out: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                key = self._normalize_key(key)
                c = out.get(key, 0) + as_fraction(coeff)
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict):
        # Trusted constructor: keys already normalized, no zero coefficients.
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @staticmethod
    def _normalize_key(key):
        raise NotImplementedError

    @staticmethod
    def _order(key):
        raise NotImplementedError

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(self._normalize_key(key), Fraction(0))

    coeff = __getitem__

    def __contains__(self, key) -> bool:
        return self._normalize_key(key) in self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def keys(self):
        return sorted(self._terms, key=self._order)

    def items(self) -> list:
        return [(k, self._terms[k]) for k in self.keys()]

    def __iter__(self) -> Iterator:
        return iter(self.keys())

    def as_dict(self) -> dict:
        return dict(self._terms)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _combine(self, other, sign: int):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + sign * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._raw(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, _FormalSum):
            return NotImplemented
        s = as_fraction(scalar)
        if not s:
            return self._raw({})
        return self._raw({k: c * s for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / as_fraction(scalar))

    def __pos__(self):
        return self


class GraphSum(_FormalSum):
    """Finitely supported map from isomorphism classes to rationals."""

    __slots__ = ()

    @staticmethod
    def _normalize_key(key):
        if isinstance(key, CanonicalGraph):
            return key
        if isinstance(key, Graph):
            return canonicalize(key)
        raise TypeError(f"GraphSum keys must be graphs, got {key!r}")

    @staticmethod
    def _order(key):
        return key.sort_key

    @classmethod
    def of(cls, g: Graph, coeff: Number = 1) -> "GraphSum":
        return cls({g: coeff})

    def map_linear(self, f: Callable[[CanonicalGraph], "GraphSum"]) -> "GraphSum":
        """Extend ``f`` (defined on basis classes) linearly."""
        out = GraphSum()
        for g, c in self._terms.items():
            out = out + c * f(g)
        return out

    def __repr__(self):
        return f"GraphSum({format_sum(self)})"

    def __str__(self):
        return format_sum(self)


class TensorSum(_FormalSum):
    """Finitely supported map from tuples of classes to rationals."""

    __slots__ = ()

    @staticmethod
    def _normalize_key(key):
        return tuple(GraphSum._normalize_key(g) for g in key)

    @staticmethod
    def _order(key):
        return tuple(g.sort_key for g in key)

    @property
    def arity(self) -> int | None:
        for k in self._terms:
            return len(k)
        return None

    def swap(self) -> "TensorSum":
        """Exchange the two factors of a 2-tensor."""
        return TensorSum._raw({(b, a): c for (a, b), c in self._terms.items()})

    def apply(self, position: int, f: Callable[[CanonicalGraph], object]) -> "TensorSum":
        """Apply the linear map ``f`` to one tensor factor.

        ``f`` may return a GraphSum (the factor is replaced) or a TensorSum
        (the factor is expanded, raising the arity).
        """
        out: dict = {}
        for key, c in self._terms.items():
            image = f(key[position])
            for sub, d in image.as_dict().items():
                sub = sub if isinstance(sub, tuple) else (sub,)
                new = key[:position] + sub + key[position + 1:]
                v = out.get(new, 0) + c * d
                if v:
                    out[new] = v
                else:
                    out.pop(new, None)
        return TensorSum._raw(out)

    def __repr__(self):
        return f"TensorSum({format_sum(self)})"

    def __str__(self):
        return format_sum(self)


def tensor(*factors: GraphSum) -> TensorSum:
    """Tensor product of GraphSums."""
    terms: dict = {(): Fraction(1)}
    for f in factors:
        nxt: dict = {}
        for key, c in terms.items():
            for g, d in f.as_dict().items():
                nxt[key + (g,)] = c * d
        terms = nxt
    return TensorSum._raw({k: c for k, c in terms.items() if c})


# ---------------------------------------------------------------------------
# pairing and distinguished functionals


def pairing(f: GraphSum, x: GraphSum) -> Fraction:
    """Sum of coefficient products over the common support."""
    a, b = f.as_dict(), x.as_dict()
    if len(a) > len(b):
        a, b = b, a
    return sum((c * b[g] for g, c in a.items() if g in b), Fraction(0))


def pairing_tensor(functionals: Iterable[GraphSum], t: TensorSum) -> Fraction:
    """Pair a tensor with a tuple of functionals, one per factor."""
    fs = [f.as_dict() for f in functionals]
    total = Fraction(0)
    for key, c in t.as_dict().items():
        if len(key) != len(fs):
            raise DomainError("functional count does not match tensor arity")
        term = c
        for g, f in zip(key, fs):
            v = f.get(g)
            if not v:
                term = 0
                break
            term *= v
        total += term
    return total


EMPTY = canonicalize(Graph(0))


def zeta(universe) -> GraphSum:
    """The all-ones functional, truncated to the members of ``universe``."""
    return GraphSum._raw({g: Fraction(1) for g in universe.members})


def counit(x: GraphSum) -> Fraction:
    return x[EMPTY]


def unit(r: Number = 1) -> GraphSum:
    return GraphSum({EMPTY: r})


def basis(g: Graph) -> GraphSum:
    return GraphSum.of(g)


class Grading(enum.Enum):
    VertexCount = "vertices"
    EdgeCount = "edges"
    ConnectedComponents = "components"


def grade(g: Graph, grading: Grading) -> int:
    if grading is Grading.VertexCount:
        return g.n_vertices
    if grading is Grading.EdgeCount:
        return g.n_edges
    return sum(connected_components(g).values())


def filter_by_grade(x: GraphSum, grading: Grading, n: int) -> GraphSum:
    """Homogeneous component of degree ``n``."""
    return GraphSum._raw({g: c for g, c in x.as_dict().items() if grade(g, grading) == n})


@dataclass(frozen=True)
class Truncation:
    """Keep classes whose grade is at most ``bound``."""

    grading: Grading
    bound: int

    def admits(self, g: Graph) -> bool:
        return grade(g, self.grading) <= self.bound

    def apply(self, x: GraphSum) -> GraphSum:
        return GraphSum._raw({g: c for g, c in x.as_dict().items() if self.admits(g)})


# ---------------------------------------------------------------------------
# output


def format_coeff(c: Fraction) -> str:
    """Exact ``p/q`` form; integers print without a denominator."""
    return str(c)


def _key_name(key) -> str:
    if isinstance(key, tuple):
        return "⊗".join(graph_name(g) for g in key)
    return graph_name(key)


def format_sum(x: _FormalSum) -> str:
    """Readable text such as ``1·edge + 2·cherry - 1/2·edge⊔edge``."""
    items = x.items()
    if not items:
        return "0"
    parts = []
    for i, (key, c) in enumerate(items):
        body = f"{format_coeff(abs(c))}·{_key_name(key)}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def sum_to_json(x: _FormalSum) -> list[dict]:
    """JSON-ready list of terms with graph6 keys and ``"p/q"`` coefficients."""
    out = []
    for key, c in x.items():
        coeff = f"{c.numerator}/{c.denominator}"
        if isinstance(key, tuple):
            out.append({"graphs": [g.encoding for g in key], "coeff": coeff})
        else:
            out.append({"graph": key.encoding, "coeff": coeff})
    return out
