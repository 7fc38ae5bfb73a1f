"""Command-line interface: ``hopfgraph <command> ...``.

Graph arguments are file paths (graph6 for ``.g6``/``.graph6``, edge lists
otherwise), named small graphs (``edge``, ``cherry``, ``K4``, ...), unions of
names written ``a,b`` or ``a⊔b``, or raw graph6 prefixed with ``g6:``.
Where a formal sum is accepted, terms look like ``2*cherry + 1/2*edge``.

Exit codes: 0 success, 2 a verification found a mismatch, 1 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .basis import basis_matrix, decompose_connected
from .coproducts import CoproductKind, coproduct, reduced_coproduct
from .counting import CountingMode, count, signature
from .errors import DomainError, HopfGraphError
from .graphs import Graph, canonicalize, graph_name, named, union_of
from .hopf import (
    GRADING_COLUMNS,
    KNOWN_BIALGEBRAS,
    KNOWN_GRADINGS,
    KNOWN_HOPF,
    TABLE_COPRODUCTS,
    TABLE_PRODUCTS,
    BialgebraConfig,
    Carrier,
    antipode,
    antipode_series,
    check_associativity,
    check_bialgebra,
    check_coassociativity,
    check_cocommutativity,
    check_commutativity,
    check_grading,
    check_hopf,
    find_hopf_config,
    sweep_grading,
)
from .io import guess_format, parse_graph
from .linalg import GraphSum, Grading, Truncation, format_coeff, format_sum, sum_to_json
from .products import ProductKind, product
from .translate import TranslationKind, translate, translate_inverse

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2
_PATH_SUFFIXES = (".g6", ".graph6", ".el", ".txt", ".edges", ".edgelist")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ---------------------------------------------------------------------------
# inputs


def _read_file(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read input file {path}: {exc.strerror or exc}") from None
    return parse_graph(text, guess_format(path))


def _looks_like_path(token: str) -> bool:
    return os.sep in token or token.endswith(_PATH_SUFFIXES)


def resolve_graph(token: str) -> Graph:
    """Turn a command-line graph argument into a graph."""
    token = token.strip()
    if os.path.isfile(token) or _looks_like_path(token):
        return _read_file(token)
    if token.startswith("g6:"):
        return parse_graph(token[3:], "graph6")
    parts = [p.strip() for p in re.split(r"[,⊔]", token)]
    if len(parts) > 1:
        return union_of(resolve_graph(p) for p in parts)
    try:
        return named(token)
    except DomainError:
        raise UsageError(f"{token!r} is neither a readable file nor a known graph name") from None


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([^+\-\s][^+\-]*?)\s*(?=[+-]|$)")


def resolve_sum(text: str) -> GraphSum:
    """Parse ``2*cherry + 1/2*edge - edge,edge`` into a formal sum."""
    out = GraphSum()
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse formal sum at column {pos + 1}: {text[pos:]!r}")
        sign, coeff, token = m.groups()
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        out = out + GraphSum.of(resolve_graph(token), c)
        pos = m.end()
    return out


# ---------------------------------------------------------------------------
# output helpers


def _graph_json(g) -> str:
    return canonicalize(g).encoding


def _jsonable(obj):
    """Recursively convert verdict payloads to JSON-ready values."""
    if isinstance(obj, Graph):
        return _graph_json(obj)
    if isinstance(obj, (GraphSum,)) or hasattr(obj, "as_dict"):
        return sum_to_json(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "value") and hasattr(obj, "name"):
        return obj.value
    return obj


def _describe(obj) -> str:
    if isinstance(obj, Graph):
        return graph_name(obj)
    if hasattr(obj, "as_dict"):
        return format_sum(obj)
    if isinstance(obj, dict):
        return ", ".join(f"{k}={_describe(v)}" for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return "(" + ", ".join(_describe(v) for v in obj) + ")"
    return str(obj)


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _emit_sum(args, x):
    _emit(args, format_sum(x), sum_to_json(x))


# ---------------------------------------------------------------------------
# commands


def cmd_count(args) -> int:
    mode = CountingMode(args.mode)
    value = count(mode, resolve_graph(args.pattern), resolve_graph(args.sample), strict=not args.ignore_isolated)
    _emit(args, format_coeff(value), {"mode": mode.value, "count": f"{value.numerator}/{value.denominator}"})
    return EXIT_OK


def cmd_signature(args) -> int:
    mode = CountingMode(args.mode)
    truncation = None
    if args.max_edges is not None:
        truncation = Truncation(Grading.EdgeCount, args.max_edges)
    elif args.max_vertices is not None:
        truncation = Truncation(Grading.VertexCount, args.max_vertices)
    sig = signature(mode, resolve_graph(args.sample), truncation, strict=not args.ignore_isolated)
    payload = {
        "mode": mode.value,
        "truncation": {"grading": sig.truncation.grading.value, "bound": sig.truncation.bound},
        "complete": sig.complete,
        "terms": sum_to_json(sig.terms),
    }
    _emit(args, format_sum(sig.terms), payload)
    return EXIT_OK


def cmd_product(args) -> int:
    _emit_sum(args, product(ProductKind(args.kind), resolve_sum(args.left), resolve_sum(args.right)))
    return EXIT_OK


def cmd_coproduct(args) -> int:
    kind = CoproductKind(args.kind)
    g = resolve_graph(args.graph)
    _emit_sum(args, reduced_coproduct(kind, g) if args.reduced else coproduct(kind, g))
    return EXIT_OK


def cmd_antipode(args) -> int:
    grading = Grading(args.grading) if args.grading else None
    config = find_hopf_config(args.product, args.coproduct, args.carrier, grading)
    x = resolve_sum(args.graph)
    result = antipode_series(config, x) if args.series else antipode(config, x)
    _emit_sum(args, result)
    return EXIT_OK


def cmd_translate(args) -> int:
    kind = TranslationKind(args.kind)
    x = resolve_sum(args.graph)
    _emit_sum(args, translate_inverse(kind, x) if args.inverse else translate(kind, x))
    return EXIT_OK


def cmd_decompose(args) -> int:
    poly = decompose_connected(resolve_graph(args.graph), ProductKind(args.product))
    _emit(args, str(poly), {"product": poly.product.value, "terms": poly.to_json()})
    return EXIT_OK


def cmd_basis_matrix(args) -> int:
    forward, inverse = basis_matrix(args.max_edges, ProductKind(args.product))
    m = inverse if args.inverse else forward
    _emit(args, m.format(), m.to_json())
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _verify_bound(bound: int, grading: Grading) -> int:
    # --bound counts edges; vertex-graded sweeps get one more so that edge
    # pairs (four vertices at bound 3) are still reached.
    return bound if grading is Grading.EdgeCount else bound + 1


def _bialgebra_cell(task):
    carrier, cop, prod, bound = task
    v = check_bialgebra(BialgebraConfig(prod, cop, carrier), bound)
    return v.holds, v.counterexample


def _hopf_cell(task):
    carrier, cop, prod, bound = task
    v = check_hopf(prod, cop, carrier, bound)
    return v.holds, (v.certificate if not v.holds else {"grading": v.grading})


def _grading_cell(task):
    op, carrier, grading, bound = task
    v = check_grading(op, grading, bound, carrier)
    return v.behaviour, v.witness


def _law_cell(task):
    law, kind, bound = task
    fn = {
        "coassociative": check_coassociativity,
        "cocommutative": check_cocommutativity,
        "associative": check_associativity,
        "commutative": check_commutativity,
    }[law]
    v = fn(kind, bound)
    return v.holds, v.counterexample


def _run_cells(fn, tasks, jobs: int) -> list:
    if jobs <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _verify_tasks(suite: str, bound: int):
    rows = []
    if suite in ("bialgebra", "hopf"):
        known = KNOWN_BIALGEBRAS if suite == "bialgebra" else KNOWN_HOPF
        for carrier in Carrier:
            for cop in TABLE_COPRODUCTS[carrier]:
                for prod in TABLE_PRODUCTS[carrier]:
                    label = f"{carrier.value:<12} {cop.symbol:<5} {prod.symbol:<4}"
                    rows.append((label, (carrier, cop, prod, _verify_bound(bound, sweep_grading(carrier))), known[carrier][(cop, prod)]))
        return (_bialgebra_cell if suite == "bialgebra" else _hopf_cell), rows
    if suite == "grading":
        for op, expected in KNOWN_GRADINGS.items():
            for (carrier, grading), exp in zip(GRADING_COLUMNS, expected):
                if exp is None:
                    continue
                label = f"{op.symbol:<5} {carrier.value:<12} {grading.value:<8}"
                rows.append((label, (op, carrier, grading, _verify_bound(bound, grading)), exp))
        return _grading_cell, rows
    for kind in CoproductKind:
        if kind is CoproductKind.Overlap:
            continue
        b = bound if kind.on_edges else bound + 1
        for law in ("coassociative", "cocommutative"):
            rows.append((f"{kind.symbol:<5} {law:<14}", (law, kind, b), True))
    for kind in ProductKind:
        b = bound if kind.on_edges else bound + 1
        for law in ("associative", "commutative"):
            rows.append((f"{kind.symbol:<5} {law:<14}", (law, kind, b), True))
    return _law_cell, rows


def _show_expected(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def cmd_verify(args) -> int:
    fn, rows = _verify_tasks(args.suite, args.bound)
    results = _run_cells(fn, [task for _, task, _ in rows], args.jobs)
    mismatches = 0
    lines = [f"suite {args.suite}, bound {args.bound}"]
    report = []
    for (label, _task, expected), (observed, evidence) in zip(rows, results):
        ok = observed == expected
        mismatches += not ok
        status = "ok" if ok else "MISMATCH"
        lines.append(f"{label}  expected {_show_expected(expected):<12} observed {_show_expected(observed):<12} {status}")
        if evidence and (not ok or observed is False or args.suite == "grading"):
            lines.append(f"    evidence: {_describe(evidence)}")
        report.append({
            "cell": label.split(),
            "expected": expected,
            "observed": observed,
            "ok": ok,
            "evidence": _jsonable(evidence),
        })
    lines.append(f"{len(rows) - mismatches}/{len(rows)} cells agree")
    _emit(args, "\n".join(lines), {"suite": args.suite, "bound": args.bound, "cells": report,
                                   "mismatches": mismatches})
    return EXIT_MISMATCH if mismatches else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopfgraph", description="Exact computations in Hopf algebras of graphs.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for verify sweeps")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    modes = [m.value for m in CountingMode]
    products = [k.value for k in ProductKind]
    coproducts = [k.value for k in CoproductKind]

    p = sub.add_parser("count", help="count a pattern inside a sample")
    p.add_argument("--mode", choices=modes, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--sample", required=True)
    p.add_argument("--ignore-isolated", action="store_true",
                   help="let edge-restricted counting skip isolated sample vertices")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("signature", help="all pattern counts of a sample up to a truncation")
    p.add_argument("--mode", choices=modes, required=True)
    p.add_argument("--sample", required=True)
    bound = p.add_mutually_exclusive_group()
    bound.add_argument("--max-edges", type=int)
    bound.add_argument("--max-vertices", type=int)
    p.add_argument("--ignore-isolated", action="store_true")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("product", help="product of two graphs or sums")
    p.add_argument("--kind", choices=products, required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a graph")
    p.add_argument("--kind", choices=coproducts, required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", help="antipode in a connected filtered Hopf algebra")
    p.add_argument("--product", choices=products, required=True)
    p.add_argument("--coproduct", choices=coproducts, required=True)
    p.add_argument("--carrier", choices=[c.value for c in Carrier], default="all")
    p.add_argument("--grading", choices=[g.value for g in Grading if g is not Grading.ConnectedComponents])
    p.add_argument("--series", action="store_true", help="use the geometric series instead of the recursion")
    p.add_argument("graph")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("translate", help="convert patterns between counting modes")
    p.add_argument("--kind", choices=[k.value for k in TranslationKind], required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("decompose", help="write a graph as a polynomial in connected graphs")
    p.add_argument("--product", choices=products, default="qs")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("basis-matrix", help="change of basis between graphs and component products")
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--product", choices=("qs", "shuffle", "disjoint", "dp"), default="qs")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_basis_matrix)

    p = sub.add_parser("verify", help="sweep the structure tables over a bounded universe")
    p.add_argument("--suite", choices=("bialgebra", "hopf", "grading", "coassoc"), required=True)
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        code = args.func(args)
        sys.stdout.flush()
        return code
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except UsageError as exc:
        print(f"hopfgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HopfGraphError as exc:
        print(f"hopfgraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
