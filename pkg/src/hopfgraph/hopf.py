"""Bialgebra and Hopf structure: primitives, convolution, antipodes, and sweeps
that classify (product, coproduct) pairs over bounded universes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .coproducts import CoproductKind, coproduct, coproduct_sum, reduced_coproduct
from .errors import DomainError, InternalError, UnsupportedConfigError
from .graphs import CanonicalGraph, Graph, canonicalize
from .linalg import EMPTY, GraphSum, Grading, TensorSum, counit, grade, tensor, unit
from .products import ProductKind, product
from .universe import BoundKind, enumerate_graphs


class Carrier(enum.Enum):
    AllGraphs = "all"
    NoIsolated = "no-isolated"

    def admits(self, g: Graph) -> bool:
        return self is Carrier.AllGraphs or not g.has_isolated_vertices


@dataclass(frozen=True)
class BialgebraConfig:
    product: ProductKind
    coproduct: CoproductKind
    carrier: Carrier
    grading: Grading = Grading.VertexCount

    def __post_init__(self):
        object.__setattr__(self, "product", ProductKind(self.product))
        object.__setattr__(self, "coproduct", CoproductKind(self.coproduct))
        object.__setattr__(self, "carrier", Carrier(self.carrier))

    @property
    def label(self) -> str:
        return f"({self.product.symbol}, {self.coproduct.symbol}) on {self.carrier.value}, {self.grading.value}"


P, C, G = ProductKind, CoproductKind, Grading
_ALL, _NOISO = Carrier.AllGraphs, Carrier.NoIsolated

# Connected graded or filtered Hopf algebras, with the gradings that make them so.
HOPF_CONFIGS: tuple[BialgebraConfig, ...] = (
    BialgebraConfig(P.DisjointUnion, C.DividedPowers, _ALL, G.VertexCount),
    BialgebraConfig(P.DividedPowers, C.DisjointUnion, _ALL, G.VertexCount),
    BialgebraConfig(P.DisjointUnion, C.VertexShuffle, _ALL, G.VertexCount),
    BialgebraConfig(P.VertexShuffle, C.DisjointUnion, _ALL, G.VertexCount),
    BialgebraConfig(P.VertexQuasiShuffle, C.DisjointUnion, _ALL, G.VertexCount),
    BialgebraConfig(P.DisjointUnion, C.DividedPowers, _NOISO, G.EdgeCount),
    BialgebraConfig(P.DisjointUnion, C.DividedPowers, _NOISO, G.VertexCount),
    BialgebraConfig(P.DividedPowers, C.DisjointUnion, _NOISO, G.EdgeCount),
    BialgebraConfig(P.DividedPowers, C.DisjointUnion, _NOISO, G.VertexCount),
    BialgebraConfig(P.VertexShuffle, C.DisjointUnion, _NOISO, G.VertexCount),
    BialgebraConfig(P.DisjointUnion, C.EdgeShuffle, _NOISO, G.EdgeCount),
    BialgebraConfig(P.EdgeShuffle, C.DisjointUnion, _NOISO, G.EdgeCount),
    BialgebraConfig(P.VertexQuasiShuffle, C.DisjointUnion, _NOISO, G.VertexCount),
    BialgebraConfig(P.EdgeQuasiShuffle, C.DisjointUnion, _NOISO, G.EdgeCount),
    BialgebraConfig(P.EdgeQuasiShuffle, C.DisjointUnion, _NOISO, G.VertexCount),
)

# Rows and columns of the compatibility tables for each carrier.
TABLE_COPRODUCTS = {
    _ALL: (C.DisjointUnion, C.DividedPowers, C.VertexShuffle, C.VertexQuasiShuffle),
    _NOISO: (C.DisjointUnion, C.DividedPowers, C.EdgeShuffle, C.EdgeQuasiShuffle),
}
TABLE_PRODUCTS = {
    _ALL: (P.DisjointUnion, P.DividedPowers, P.VertexShuffle, P.VertexQuasiShuffle),
    _NOISO: (P.DisjointUnion, P.DividedPowers, P.EdgeShuffle, P.EdgeQuasiShuffle, P.VertexShuffle,
             P.VertexQuasiShuffle),
}


def _known_bialgebra(carrier: Carrier, cop: CoproductKind, prod: ProductKind) -> bool:
    if cop is C.DisjointUnion:
        return prod is not P.DisjointUnion
    return prod is P.DisjointUnion


KNOWN_BIALGEBRAS = {
    carrier: {(cop, prod): _known_bialgebra(carrier, cop, prod)
              for cop in TABLE_COPRODUCTS[carrier] for prod in TABLE_PRODUCTS[carrier]}
    for carrier in Carrier
}
KNOWN_HOPF = {
    carrier: {key: value and key not in ((C.EdgeQuasiShuffle, P.DisjointUnion),
                                         (C.VertexQuasiShuffle, P.DisjointUnion))
              for key, value in table.items()}
    for carrier, table in KNOWN_BIALGEBRAS.items()
}

# Grading behaviour; columns are (all graphs by vertices, no-isolated by edges, no-isolated by vertices).
GRADING_COLUMNS = ((_ALL, G.VertexCount), (_NOISO, G.EdgeCount), (_NOISO, G.VertexCount))
KNOWN_GRADINGS = {
    C.DisjointUnion: ("graded", "graded", "graded"),
    C.DividedPowers: ("graded", "graded", "graded"),
    C.EdgeShuffle: (None, "graded", "non-filtered"),
    C.EdgeQuasiShuffle: (None, "non-filtered", "non-filtered"),
    C.VertexShuffle: ("graded", None, None),
    C.VertexQuasiShuffle: ("non-filtered", None, None),
    P.DisjointUnion: ("graded", "graded", "graded"),
    P.DividedPowers: ("graded", "graded", "graded"),
    P.EdgeShuffle: (None, "graded", "filtered"),
    P.EdgeQuasiShuffle: (None, "filtered", "filtered"),
    P.VertexShuffle: ("graded", None, "graded"),
    P.VertexQuasiShuffle: ("filtered", None, "filtered"),
}


def find_hopf_config(prod, cop, carrier, grading: Grading | None = None) -> BialgebraConfig:
    """Look up a connected graded/filtered Hopf configuration, or raise."""
    prod, cop, carrier = ProductKind(prod), CoproductKind(cop), Carrier(carrier)
    matches = [cfg for cfg in HOPF_CONFIGS if (cfg.product, cfg.coproduct, cfg.carrier) == (prod, cop, carrier)]
    for cfg in matches:
        if cfg.grading is grading:
            return cfg
    if matches:
        return matches[0]
    if KNOWN_BIALGEBRAS[carrier].get((cop, prod)):
        raise UnsupportedConfigError(
            f"({prod.symbol}, {cop.symbol}) on {carrier.value} graphs is a bialgebra without an antipode: "
            "the coproduct is not filtered, so the antipode series never terminates"
        )
    raise UnsupportedConfigError(
        f"({prod.symbol}, {cop.symbol}) on {carrier.value} graphs is not a connected filtered Hopf algebra"
    )


def _as_sum(x) -> GraphSum:
    return x if isinstance(x, GraphSum) else GraphSum.of(x)


def _check_carrier(carrier: Carrier, x: GraphSum):
    for g in x:
        if not carrier.admits(g):
            raise DomainError(f"{g.encoding} has isolated vertices, outside the carrier")


# ---------------------------------------------------------------------------
# primitives and convolution


def is_primitive(x, kind: CoproductKind) -> bool:
    """True iff ``Δ(x) = x⊗e + e⊗x``."""
    x = _as_sum(x)
    e = unit()
    return coproduct_sum(CoproductKind(kind), x) == tensor(x, e) + tensor(e, x)


def _evaluate(f, g: CanonicalGraph, domain) -> Fraction:
    if domain is not None and g not in domain:
        raise DomainError(f"{g.encoding} lies outside the truncation of the functional")
    if callable(f) and not isinstance(f, GraphSum):
        return Fraction(f(g))
    return f[g]


def convolution_power(f, g, kind, x, domain=None) -> Fraction:
    """``(f * g)(x) = Σ f(x') g(x'')`` over the coproduct ``Δ(x) = Σ x' ⊗ x''``.

    ``f`` and ``g`` may be GraphSums read as functionals, signatures, or
    callables on classes. ``kind`` is a coproduct kind or a config. When the
    functionals are truncations, pass the universe they are exact on as
    ``domain``; tensor factors outside it raise :class:`DomainError`.
    """
    cop = kind.coproduct if isinstance(kind, BialgebraConfig) else CoproductKind(kind)
    total = Fraction(0)
    for (a, b), c in coproduct_sum(cop, _as_sum(x)).items():
        fa = _evaluate(f, a, domain)
        if fa:
            total += c * fa * _evaluate(g, b, domain)
    return total


Map = Callable[[CanonicalGraph], GraphSum]


def linear(f: Map) -> Callable[[GraphSum], GraphSum]:
    return lambda x: _as_sum(x).map_linear(f)


def convolve_maps(F: Map, G_: Map, config: BialgebraConfig) -> Map:
    """Convolution ``m ∘ (F ⊗ G) ∘ Δ`` of two linear maps given on basis classes."""
    cache: dict = {}

    def h(g: CanonicalGraph) -> GraphSum:
        if g not in cache:
            out = GraphSum()
            for (a, b), c in coproduct(config.coproduct, g).items():
                left = F(a)
                if left:
                    right = G_(b)
                    if right:
                        out = out + c * product(config.product, left, right)
            cache[g] = out
        return cache[g]

    return h


def identity_map(g: CanonicalGraph) -> GraphSum:
    return GraphSum.of(g)


def unit_counit(g: CanonicalGraph) -> GraphSum:
    return unit() if g == EMPTY else GraphSum()


def convolution_power_map(F: Map, n: int, config: BialgebraConfig) -> Map:
    """``F^{*n}``; ``F^{*0}`` is ``u∘ε``."""
    out = unit_counit
    for _ in range(n):
        out = convolve_maps(out, F, config)
    return out


def _minus_augmentation(g: CanonicalGraph) -> GraphSum:
    # u∘ε − id
    return unit_counit(g) - GraphSum.of(g)


def _augmentation(g: CanonicalGraph) -> GraphSum:
    # id − u∘ε
    return GraphSum.of(g) - unit_counit(g)


# ---------------------------------------------------------------------------
# antipode


@lru_cache(maxsize=None)
def _antipode_basis(config: BialgebraConfig, g: CanonicalGraph) -> GraphSum:
    if g == EMPTY:
        return unit()
    level = grade(g, config.grading)
    out = -GraphSum.of(g)
    for (a, b), c in reduced_coproduct(config.coproduct, g).items():
        if grade(a, config.grading) >= level:
            raise InternalError(
                f"antipode recursion would not descend at {g.encoding} under {config.label}"
            )
        out = out - c * product(config.product, _antipode_basis(config, a), GraphSum.of(b))
    return out


def antipode(config: BialgebraConfig, x) -> GraphSum:
    """Antipode via ``S(x) = -x - Σ S(x') x''`` over the reduced coproduct."""
    cfg = find_hopf_config(config.product, config.coproduct, config.carrier, config.grading)
    x = _as_sum(x)
    _check_carrier(cfg.carrier, x)
    return x.map_linear(lambda g: _antipode_basis(cfg, g))


def antipode_series(config: BialgebraConfig, x, max_terms: int | None = None) -> GraphSum:
    """``Σ_n (u∘ε − id)^{*n}(x)``, summed until the terms vanish."""
    cfg = find_hopf_config(config.product, config.coproduct, config.carrier, config.grading)
    x = _as_sum(x)
    _check_carrier(cfg.carrier, x)
    top = max((grade(g, cfg.grading) for g in x), default=0)
    limit = top + 1 if max_terms is None else max_terms
    total = GraphSum()
    power = unit_counit
    for n in range(limit + 1):
        term = linear(power)(x)
        if n > top and term:
            raise InternalError("antipode series did not terminate within the grade")
        total = total + term
        power = convolve_maps(power, _minus_augmentation, cfg)
    return total


def antipode_defect(config: BialgebraConfig, x, side: str = "left") -> GraphSum:
    """``m(S⊗id)Δ(x) − u∘ε(x)`` (or the ``id⊗S`` version); zero when the axiom holds."""
    cfg = find_hopf_config(config.product, config.coproduct, config.carrier, config.grading)
    x = _as_sum(x)
    S = lambda g: _antipode_basis(cfg, g)  # noqa: E731
    F, G_ = (S, identity_map) if side == "left" else (identity_map, S)
    return linear(convolve_maps(F, G_, cfg))(x) - unit(counit(x))


def unipotency_holds(config: BialgebraConfig, g: Graph) -> bool:
    """``(id − u∘ε)^{*n}(g) = 0`` for the first ``n`` above the grade of ``g``."""
    g = canonicalize(g)
    n = grade(g, config.grading) + 1
    return not convolution_power_map(_augmentation, n, config)(g)


# ---------------------------------------------------------------------------
# sweeps


def _universe(carrier: Carrier, grading: Grading, bound: int):
    if carrier is Carrier.NoIsolated and grading is Grading.EdgeCount:
        return enumerate_graphs(BoundKind.MaxEdges, bound, no_isolated=True)
    return enumerate_graphs(BoundKind.MaxVertices, bound, no_isolated=carrier is Carrier.NoIsolated)


def sweep_grading(carrier: Carrier) -> Grading:
    return Grading.EdgeCount if carrier is Carrier.NoIsolated else Grading.VertexCount


def _pairs(members, grading: Grading, bound: int):
    ms = list(members)
    for i, x in enumerate(ms):
        for y in ms[i:]:
            if grade(x, grading) + grade(y, grading) <= bound:
                yield x, y


@dataclass
class Verdict:
    holds: bool
    counterexample: dict | None = None
    checked: int = 0


def _tensor_product(kind: ProductKind, s: TensorSum, t: TensorSum) -> TensorSum:
    # (a ⊗ b)(c ⊗ d) = ac ⊗ bd
    out = TensorSum()
    for (a, b), c in s.items():
        for (x, y), d in t.items():
            out = out + (c * d) * tensor(product(kind, a, x), product(kind, b, y))
    return out


def _bialgebra_failure(cfg: BialgebraConfig, x: CanonicalGraph, y: CanonicalGraph):
    xy = product(cfg.product, x, y)
    lhs = coproduct_sum(cfg.coproduct, xy)
    rhs = _tensor_product(cfg.product, coproduct(cfg.coproduct, x), coproduct(cfg.coproduct, y))
    if lhs != rhs:
        return {"x": x, "y": y, "lhs": lhs, "rhs": rhs}
    if counit(xy) != counit(GraphSum.of(x)) * counit(GraphSum.of(y)):
        return {"x": x, "y": y, "counit": True}
    return None


def check_bialgebra(config: BialgebraConfig, bound: int) -> Verdict:
    """Test ``Δ(xy) = Δ(x)Δ(y)`` for all basis pairs of total size at most ``bound``.

    Size is counted in edges on the no-isolated carrier and in vertices
    otherwise. Pairs are visited smallest first, so a reported
    counterexample is a minimal one.
    """
    grading = sweep_grading(config.carrier)
    members = _universe(config.carrier, grading, bound).members
    if coproduct(config.coproduct, EMPTY) != tensor(unit(), unit()):
        return Verdict(False, {"x": EMPTY, "y": EMPTY, "unit": True})
    pairs = sorted(_pairs(members, grading, bound), key=lambda p: (grade(p[0], grading) + grade(p[1], grading),
                                                                   p[0].sort_key, p[1].sort_key))
    checked = 0
    for x, y in pairs:
        checked += 1
        fail = _bialgebra_failure(config, x, y)
        if fail:
            return Verdict(False, fail, checked)
    return Verdict(True, None, checked)


@dataclass
class GradingVerdict:
    behaviour: str  # "graded", "filtered" or "non-filtered"
    witness: dict | None = None


def check_grading(op, grading: Grading, bound: int, carrier: Carrier = Carrier.AllGraphs) -> GradingVerdict:
    """Classify a product or coproduct against a grading over a bounded universe.

    Coproducts are checked term by term against ``deg x' + deg x'' = deg x``,
    products against ``deg γ = deg x + deg y``. Any term above the expected
    degree makes the operation non-filtered; terms below it make it filtered.
    """
    carrier = Carrier(carrier)
    members = _universe(carrier, grading, bound).members
    lower = None
    if isinstance(op, CoproductKind):
        for g in members:
            if op.on_edges and g.has_isolated_vertices:
                continue
            d = grade(g, grading)
            for (a, b) in coproduct(op, g):
                s = grade(a, grading) + grade(b, grading)
                if s > d:
                    return GradingVerdict("non-filtered", {"input": g, "term": (a, b)})
                if s < d and lower is None:
                    lower = {"input": g, "term": (a, b)}
    else:
        op = ProductKind(op)
        for x, y in _pairs(members, grading, bound):
            d = grade(x, grading) + grade(y, grading)
            for gamma in product(op, x, y):
                s = grade(gamma, grading)
                if s > d:
                    return GradingVerdict("non-filtered", {"input": (x, y), "term": gamma})
                if s < d and lower is None:
                    lower = {"input": (x, y), "term": gamma}
    return GradingVerdict("filtered", lower) if lower else GradingVerdict("graded")


@dataclass
class HopfVerdict:
    holds: bool
    grading: Grading | None = None
    certificate: dict | None = None


def _connected_filtered_grading(cfg: BialgebraConfig, bound: int) -> Grading | None:
    gradings = [Grading.VertexCount] if cfg.carrier is Carrier.AllGraphs else [Grading.EdgeCount, Grading.VertexCount]
    for grading in gradings:
        if grading is Grading.EdgeCount and cfg.carrier is Carrier.AllGraphs:
            continue
        cop = check_grading(cfg.coproduct, grading, bound, cfg.carrier)
        prod = check_grading(cfg.product, grading, bound, cfg.carrier)
        if cop.behaviour != "non-filtered" and prod.behaviour != "non-filtered":
            return grading
    return None


def check_hopf(prod, cop, carrier, bound: int) -> HopfVerdict:
    """Decide whether a (product, coproduct) pair is a Hopf algebra up to ``bound``.

    Non-bialgebras fail with their bialgebra counterexample. A bialgebra that
    is connected and filtered for some grading has an antipode; it is
    computed and checked on every basis element. Otherwise the certificate
    is the geometric series ``Σ (u∘ε − id)^{*n}`` on the smallest non-empty
    basis element, which stays non-zero at every power up to ``bound + 2``.
    """
    carrier = Carrier(carrier)
    cfg = BialgebraConfig(prod, cop, carrier, sweep_grading(carrier))
    bialg = check_bialgebra(cfg, bound)
    if not bialg.holds:
        return HopfVerdict(False, None, {"not_a_bialgebra": bialg.counterexample})
    grading = _connected_filtered_grading(cfg, bound)
    if grading is not None:
        hopf = BialgebraConfig(cfg.product, cfg.coproduct, carrier, grading)
        for g in _universe(carrier, grading, bound).members:
            if antipode_defect(hopf, g) or antipode_defect(hopf, g, "right"):
                return HopfVerdict(False, grading, {"antipode_fails_at": g})
        return HopfVerdict(True, grading)
    members = [g for g in _universe(carrier, cfg.grading, bound).members if g != EMPTY]
    g = members[0]
    powers = []
    power = unit_counit
    for _ in range(bound + 2):
        power = convolve_maps(power, _minus_augmentation, cfg)
        value = power(g)
        if not value:
            raise InternalError(f"antipode series terminated at {g.encoding}; the config looks filtered")
        powers.append(value)
    return HopfVerdict(False, None, {"graph": g, "series_powers": powers})


# ---------------------------------------------------------------------------
# algebra and coalgebra laws


def law_universe(op) -> tuple:
    """Default sweep domain for a single operation: edge-based ones on graphs
    without isolated vertices graded by edges, the rest on all graphs by vertices."""
    if op.on_edges:
        return Carrier.NoIsolated, Grading.EdgeCount
    return Carrier.AllGraphs, Grading.VertexCount


def check_coassociativity(kind: CoproductKind, bound: int, carrier: Carrier | None = None) -> Verdict:
    """``(Δ⊗id)Δ = (id⊗Δ)Δ`` on every basis element up to ``bound``."""
    kind = CoproductKind(kind)
    default_carrier, grading = law_universe(kind)
    carrier = Carrier(carrier) if carrier is not None else default_carrier
    members = _universe(carrier, grading if carrier is Carrier.NoIsolated else Grading.VertexCount, bound).members
    split = lambda a: coproduct(kind, a)  # noqa: E731
    for i, g in enumerate(members, start=1):
        d = coproduct(kind, g)
        lhs, rhs = d.apply(0, split), d.apply(1, split)
        if lhs != rhs:
            return Verdict(False, {"x": g, "lhs": lhs, "rhs": rhs}, i)
    return Verdict(True, None, len(members))


def check_cocommutativity(kind: CoproductKind, bound: int, carrier: Carrier | None = None) -> Verdict:
    kind = CoproductKind(kind)
    default_carrier, grading = law_universe(kind)
    carrier = Carrier(carrier) if carrier is not None else default_carrier
    members = _universe(carrier, grading if carrier is Carrier.NoIsolated else Grading.VertexCount, bound).members
    for i, g in enumerate(members, start=1):
        d = coproduct(kind, g)
        if d.swap() != d:
            return Verdict(False, {"x": g, "lhs": d, "rhs": d.swap()}, i)
    return Verdict(True, None, len(members))


def check_associativity(kind: ProductKind, bound: int, carrier: Carrier | None = None) -> Verdict:
    """``(xy)z = x(yz)`` for all triples of total size at most ``bound``."""
    kind = ProductKind(kind)
    default_carrier, grading = law_universe(kind)
    carrier = Carrier(carrier) if carrier is not None else default_carrier
    if carrier is Carrier.AllGraphs:
        grading = Grading.VertexCount
    members = _universe(carrier, grading, bound).members
    checked = 0
    for x in members:
        for y in members:
            for z in members:
                if grade(x, grading) + grade(y, grading) + grade(z, grading) > bound:
                    continue
                checked += 1
                lhs = product(kind, product(kind, x, y), z)
                rhs = product(kind, x, product(kind, y, z))
                if lhs != rhs:
                    return Verdict(False, {"x": x, "y": y, "z": z, "lhs": lhs, "rhs": rhs}, checked)
    return Verdict(True, None, checked)


def check_commutativity(kind: ProductKind, bound: int, carrier: Carrier | None = None) -> Verdict:
    kind = ProductKind(kind)
    default_carrier, grading = law_universe(kind)
    carrier = Carrier(carrier) if carrier is not None else default_carrier
    if carrier is Carrier.AllGraphs:
        grading = Grading.VertexCount
    checked = 0
    for x, y in _pairs(_universe(carrier, grading, bound).members, grading, bound):
        checked += 1
        lhs, rhs = product(kind, x, y), product(kind, y, x)
        if lhs != rhs:
            return Verdict(False, {"x": x, "y": y, "lhs": lhs, "rhs": rhs}, checked)
    return Verdict(True, None, checked)
