"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 certification failure, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import bounds
from .certify import certify_chromatic_disc, certify_forest_disc, certify_girth_disc, describe
from .families import FAMILIES, GraphFamilySpec, generate
from .genfun import (
    bcf_polynomial,
    chromatic_polynomial,
    double_rooted_tree_polynomial,
    forest_polynomial,
    path_polynomial,
    rooted_tree_polynomial,
)
from .graph import EdgeOrdering, GraphError, LimitError, max_degree, second_max_degree
from .io import ParseError, format_edge_list, parse_edge_list, parse_graph6
from .poly import DEFAULT_TOL, DegreeCapError, PolynomialError, RootFindingError, find_roots

EXIT_OK, EXIT_INPUT, EXIT_CERT, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="edge-list file ('-' for stdin); .g6 files are read as graph6")
    p.add_argument("--graph6", action="store_true", help="treat the input as graph6")
    p.add_argument("--family", choices=FAMILIES, help="generate the input instead of reading it")
    p.add_argument("--sizes", nargs="*", default=[], help="family sizes; use a,b or l1,l2,l3 for tuples")
    p.add_argument("--delta", type=int, help="degree cap")
    p.add_argument("--girth-floor", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--density", type=float, default=0.6)
    p.add_argument("--connected", action="store_true")


def _family_spec(args) -> GraphFamilySpec:
    sizes = []
    for tok in args.sizes:
        parts = tuple(int(t) for t in tok.split(","))
        sizes.append(parts if len(parts) > 1 else parts[0])
    return GraphFamilySpec(
        args.family, tuple(sizes), args.delta, args.girth_floor, args.seed, args.count,
        args.connected, args.density,
    )


def _load(args):
    if (args.input is None) == (args.family is None):
        raise UsageError("give exactly one input: a file or --family")
    if args.family:
        return generate(_family_spec(args))
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    if args.graph6 or args.input.endswith((".g6", ".graph6")):
        return parse_graph6(text)
    return parse_edge_list(text)


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _poly_for(kind: str, G, args):
    if kind == "chromatic":
        return chromatic_polynomial(G)
    if kind == "bcf":
        order = EdgeOrdering.from_sequence([int(t) for t in args.order.split(",")]) if args.order else None
        return bcf_polynomial(G, order)
    if kind == "forest":
        return forest_polynomial(G)
    if kind == "tree":
        return rooted_tree_polynomial(G, args.vertex)
    if kind == "dtree":
        return double_rooted_tree_polynomial(G, args.vertex, args.vertex2)
    if kind == "paths":
        return path_polynomial(G, args.vertex, args.vertex2)
    raise UsageError(f"unknown polynomial {kind}")


def cmd_poly(args, out) -> int:
    for i, G in enumerate(_load(args)):
        p = _poly_for(args.kind, G, args)
        if args.format == "text":
            out.write(f"{p}\n")
        else:
            _emit({"schema": 1, "kind": args.kind, "graph": i, "coefficients": [str(a) for a in p.coeffs]}, out)
    return EXIT_OK


def _disc_radius(kind: str, G, K: float) -> float:
    if kind == "chromatic":
        return K * max_degree(G)
    delta = second_max_degree(G) if kind == "forest" else max_degree(G)
    if delta == 0:
        return 0.0
    return 1 / (2 * delta) if kind == "forest" else 1 / (K * delta)


def cmd_zeros(args, out) -> int:
    rows = []
    for i, G in enumerate(_load(args)):
        p = _poly_for(args.kind, G, args)
        rs = find_roots(p, args.tol)
        radius = _disc_radius(args.kind, G, args.K)
        _emit({"schema": 1, "kind": args.kind, "graph": i, "radius": radius, **rs.to_dict()}, out)
        rows += [(i, r.real, r.imag, radius) for r in rs.roots]
    if args.plot_csv:
        with open(args.plot_csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["graph", "re", "im", "radius"])
            w.writerows(rows)
    return EXIT_OK


def cmd_certify(args, out) -> int:
    status = EXIT_OK
    cache: dict = {}
    for G in _load(args):
        if args.theorem == "chromatic":
            cert = certify_chromatic_disc(G, args.K, args.tol, cache)
        elif args.theorem == "girth":
            cert = certify_girth_disc(G, args.g, args.tol, cache)
        else:
            cert = certify_forest_disc(G, args.tol, cache)
        if args.format == "text":
            out.write(f"{cert.verdict} {cert.theorem} radius={cert.radius:.6g} "
                      f"extreme={cert.extreme_modulus:.6g} margin={cert.margin:.6g} [{describe(G)}]\n")
        else:
            out.write(cert.to_json() + "\n")
        if not cert.passed:
            status = EXIT_CERT
    return status


def _parse_g(tok: str) -> float:
    return bounds.INF if tok.lower() in ("inf", "infinity") else int(tok)


DEFAULT_TABLE = ("3", "4", "5", "6", "7", "8", "9", "10", "15", "20", "25", "100", "inf")


def cmd_bounds(args, out) -> int:
    if args.what == "table":
        rows = bounds.emit_table([_parse_g(t) for t in (args.g or DEFAULT_TABLE)])
    elif args.what == "kg":
        if not args.g or len(args.g) != 1:
            raise UsageError("bounds kg needs exactly one --g")
        rows = [bounds.solve_kg(int(args.g[0]))]
    else:
        rows = [bounds.k_infinity()]
    fmt = args.format
    if fmt == "csv":
        out.write(bounds.table_csv(rows))
    elif fmt == "text":
        out.write(bounds.table_text(rows) + "\n")
    else:
        out.write(bounds.table_json(rows) + "\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.family is None:
        raise UsageError("gen needs --family")
    for G in generate(_family_spec(args)):
        out.write(format_edge_list(G))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromzeros", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="emit a graph polynomial as JSON coefficients (low degree first)")
    p.add_argument("kind", choices=("chromatic", "bcf", "forest", "tree", "dtree", "paths"))
    _add_input(p)
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("--vertex2", type=int, default=1)
    p.add_argument("--order", help="comma-separated edge ids, smallest first (bcf only)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("zeros", help="certified complex zeros of a graph polynomial")
    p.add_argument("kind", choices=("chromatic", "bcf", "forest", "tree", "dtree", "paths"))
    _add_input(p)
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("--vertex2", type=int, default=1)
    p.add_argument("--order")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help=f"residual tolerance (default {DEFAULT_TOL})")
    p.add_argument("--K", type=float, default=5.94, help="disc constant for the plot radius (default 5.94)")
    p.add_argument("--plot-csv", help="write root coordinates and disc radius to this CSV file")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("certify", help="check zeros against a zero-free disc")
    p.add_argument("theorem", choices=("chromatic", "girth", "forest"))
    _add_input(p)
    p.add_argument("--K", type=float, default=5.94, help="chromatic disc constant (default 5.94)")
    p.add_argument("--g", type=int, default=3, help="girth parameter for 'girth' (default 3)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help=f"residual tolerance (default {DEFAULT_TOL})")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bounds", help="disc constants K_g and K_inf")
    p.add_argument("what", choices=("table", "kg", "kinf"))
    p.add_argument("--g", nargs="*", help="girth values ('inf' allowed in table)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", help="emit generated graphs in edge-list format")
    _add_input(p)
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (DegreeCapError, LimitError) as exc:
        err.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except ParseError as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (GraphError, PolynomialError, bounds.BoundsError, OSError, ValueError) as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except RootFindingError as exc:
        err.write(f"root finding failed: {exc}\n")
        return EXIT_CAP


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
