#!/usr/bin/env python3
"""
Command-line front end for Hyperbox.

Reads object documents (JSON, schema "hyperbox/1"), runs products,
exponentials, functors, hom searches, matrices and verification suites,
and writes JSON, CSV, text or DOT to stdout or --out.

Usage:
    python hyperbox.py product --kind laplacian a.json b.json
    python hyperbox.py exp --kind box-r a.json b.json --out exp.json
    python hyperbox.py homs a.json b.json --anchor v0=v1 --count
    python hyperbox.py matrix --which L four_vertex.json
    python hyperbox.py verify --suite census --kmax 1 doubled_incidence.json
    python hyperbox.py dot a.json --out a.dot

Exit codes: 0 success, 1 verification mismatch, 2 input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from src.config import get_config
from src.core import EDGE, INCIDENCE, VERTEX, GraphObject
from src.documents import (
    dumps,
    dumps_object,
    parse,
    serialize_hom_set,
)
from src.dot_export import to_dot
from src.elements import parse_label
from src.errors import AnchorError, HomCountOverflowError, HyperboxError, InputError, InternalError
from src.exponentials import EXPONENTIALS, exponential
from src.functors import FUNCTORS, apply_functor
from src.homsearch import MONIC_SORTS, AnchorConstraint, count_homs, enumerate_homs
from src.logging_config import LEVELS, setup_logging
from src.products import PRODUCTS, dual, product
from src.spectral import (
    adjacency_matrix,
    complete_incidence,
    complete_laplacian,
    degree_matrix,
    incidence_matrix,
    laplacian_matrix,
    oriented,
    signed_walk_matrix,
)
from src.verification import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2

SORT_NAMES = {"vertex": VERTEX, "edge": EDGE, "incidence": INCIDENCE}

MATRICES = {
    "H": incidence_matrix,
    "A": adjacency_matrix,
    "D": degree_matrix,
    "L": laplacian_matrix,
    "Hbar": complete_incidence,
    "Lbar": complete_laplacian,
}


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def _load(path: str) -> GraphObject:
    return parse(path).obj


def parse_anchor(text: str, domain: GraphObject) -> tuple:
    """
    Parse "[sort:]x=y" into a (sort, x, y) triple.

    Without a sort prefix, x must name an element of exactly one sort of
    the domain.

    Raises:
        AnchorError: Malformed text, or an ambiguous or unknown x.
    """
    sort = None
    for name, value in SORT_NAMES.items():
        if text.startswith(f"{name}:"):
            sort, text = value, text[len(name) + 1:]
            break
    if "=" not in text:
        raise AnchorError(f"Anchor {text!r} must look like x=y")
    x_text, y_text = text.split("=", 1)
    try:
        x, y = parse_label(x_text), parse_label(y_text)
    except ValueError as e:
        raise AnchorError(f"Anchor {text!r}: {e}") from e
    if sort is None:
        sorts = [s for s in domain.sorts if x in domain.elements(s)]
        if len(sorts) != 1:
            problem = "ambiguous" if sorts else "unknown"
            raise AnchorError(f"Anchor source {x_text!r} is {problem}; prefix it with its sort")
        sort = sorts[0]
    return sort, x, y


# =============================================================================
# Commands
# =============================================================================

def cmd_product(args) -> int:
    result = product(args.kind, _load(args.a), _load(args.b))
    _emit(dumps_object(result), args.out)
    return EXIT_OK


def cmd_exp(args) -> int:
    exp = exponential(args.kind, _load(args.a), _load(args.b))
    _emit(dumps_object(exp.carrier), args.out)
    return EXIT_OK


def cmd_dual(args) -> int:
    _emit(dumps_object(dual(_load(args.a))), args.out)
    return EXIT_OK


def cmd_functor(args) -> int:
    _emit(dumps_object(apply_functor(args.name, _load(args.a))), args.out)
    return EXIT_OK


def cmd_homs(args) -> int:
    domain, codomain = _load(args.a), _load(args.b)
    anchors = AnchorConstraint(tuple(parse_anchor(text, domain) for text in args.anchor))
    if args.count:
        _emit(f"{count_homs(domain, codomain, anchors, args.monic)}\n", args.out)
    else:
        _emit(dumps(serialize_hom_set(enumerate_homs(domain, codomain, anchors, args.monic))), args.out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    doc = parse(args.a)
    if args.orientation == "file":
        if doc.orientation is None:
            raise InputError(f"{args.a} has no orientation")
        og = oriented(doc.obj, doc.orientation)
    elif args.orientation is None:
        og = oriented(doc.obj, doc.orientation)
    else:
        og = oriented(doc.obj, args.orientation)

    if args.which == "walks":
        matrix = signed_walk_matrix(og, args.power if args.power is not None else 1)
    else:
        matrix = MATRICES[args.which](og)
        if args.power is not None:
            matrix = matrix.power(args.power)
    _emit(matrix.to_csv() if args.format == "csv" else matrix.to_text(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    objects = []
    for path in args.objects:
        doc = parse(path)
        objects.append(oriented(doc.obj, doc.orientation) if doc.orientation is not None else doc.obj)
    report = run_suite(args.suite, objects, seed=args.seed, k_max=args.kmax, size=args.size)
    _emit(report.to_text(), args.out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_dot(args) -> int:
    _emit(to_dot(_load(args.a), args.name), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Hyperbox: box products, exponentials and weak walks")
    parser.add_argument("--log-level", choices=LEVELS, help="Override LOG_LEVEL for this run")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", help="Write output to this file instead of stdout")
        p.set_defaults(handler=handler)
        return p

    p = command("product", cmd_product, "Product of two objects")
    p.add_argument("--kind", required=True, choices=sorted(PRODUCTS))
    p.add_argument("a")
    p.add_argument("b")

    p = command("exp", cmd_exp, "Exponential [A, B]")
    p.add_argument("--kind", required=True, choices=sorted(EXPONENTIALS))
    p.add_argument("a")
    p.add_argument("b")

    p = command("dual", cmd_dual, "Incidence dual")
    p.add_argument("a")

    p = command("functor", cmd_functor, "Apply a functor")
    p.add_argument("--name", required=True, choices=sorted(FUNCTORS))
    p.add_argument("a")

    p = command("homs", cmd_homs, "Enumerate or count homomorphisms A -> B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--anchor", action="append", default=[], help="[sort:]x=y, repeatable")
    p.add_argument("--count", action="store_true", help="Print only the number of homs")
    p.add_argument("--monic", choices=sorted(MONIC_SORTS), help="Restrict to maps injective on a sort")

    p = command("matrix", cmd_matrix, "Oriented-hypergraph matrices")
    p.add_argument("--which", required=True, choices=sorted(MATRICES) + ["walks"])
    p.add_argument("--power", type=int, help="Raise to this power (walk length for --which walks)")
    p.add_argument("--orientation", choices=["all-plus", "all-minus", "file"],
                   help="Default: the document's orientation, else all-plus")
    p.add_argument("--format", choices=["csv", "text"], default="csv")
    p.add_argument("a")

    p = command("verify", cmd_verify, "Run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--kmax", type=int, help="Largest walk length (default from config)")
    p.add_argument("--seed", type=int, help="Random seed (default from config)")
    p.add_argument("--size", type=int, help="Random corpus size (default from config)")
    p.add_argument("objects", nargs="*")

    p = command("dot", cmd_dot, "Graphviz DOT export")
    p.add_argument("--name", help="Graph name")
    p.add_argument("a")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging("hyperbox", get_config(), level=args.log_level)
    try:
        return args.handler(args)
    except (InputError, HomCountOverflowError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    except InternalError as e:
        logger.error(f"Internal check failed: {e}")
        return EXIT_MISMATCH
    except HyperboxError as e:
        logger.error(str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
