"""Command-line front end.

Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 not equivalent,
4 inconsistent diagram.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import io
from ._guards import SizeGuardError
from .counting import (
    enumerate_achievable_diagrams,
    iter_consistent_diagrams,
    upper_bound_general,
    upper_bound_tree,
)
from .equivalence import RELATIONS, DifferentGraphs
from .graph import GraphError, is_tree
from .morse import MorseError, format_simplex, validate
from .persistence import compute_diagram_fast, compute_diagram_oracle
from .realization import InconsistentDiagram, RealizationError, TooManyPairs, realize
from .render import RenderError, RenderSpec, render_barcode

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_NOT_EQUIVALENT, EXIT_INCONSISTENT = 0, 1, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code, msg):
        self.code = code
        super().__init__(msg)


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Fail(EXIT_INTERNAL, f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_function(graph_path, func_path):
    g = io.parse_graph(_read(graph_path))
    return validate(g, io.parse_function(_read(func_path)))


def cmd_validate(args):
    f = _load_function(args.graph, args.function)
    report = {
        "criticals": [[format_simplex(s), io.format_rational(v)] for s, v in f.criticals],
        "regular_pairs": [
            [v, list(e), io.format_rational(f.values[e])]
            for v, e in sorted(f.regular_pairs)
        ],
    }
    _emit(args, json.dumps(report))


def cmd_persist(args):
    f = _load_function(args.graph, args.function)
    d = compute_diagram_oracle(f) if args.oracle else compute_diagram_fast(f)
    _emit(args, io.dumps(io.diagram_to_json(d)))


def cmd_realize(args):
    t = io.parse_graph(_read(args.graph))
    d = io.parse_diagram(_read(args.diagram))
    rng = random.Random(args.randomize_choices) if args.randomize_choices is not None else None
    f = realize(t, d, rng=rng)
    _emit(args, io.dumps(io.function_to_json(f)))


def cmd_count(args):
    if args.betti1 is None:
        value = upper_bound_tree(args.simplices, args.pairs)
    else:
        value = upper_bound_general(args.simplices, args.betti1, args.pairs)
    _emit(args, str(value))


def cmd_equiv(args):
    g = io.parse_graph(_read(args.graph))
    f1 = validate(g, io.parse_function(_read(args.first)))
    f2 = validate(g, io.parse_function(_read(args.second)))
    same = RELATIONS[args.relation](f1, f2)
    _emit(args, json.dumps({"relation": args.relation, "equivalent": same}))
    return EXIT_OK if same else EXIT_NOT_EQUIVALENT


def cmd_enumerate(args):
    t = io.parse_graph(_read(args.tree))
    if not is_tree(t):
        raise _Fail(EXIT_INVALID, "enumerate needs a tree")
    n = t.n_simplices
    ks = [args.pairs] if args.pairs is not None else range(len(t.edges) + 1)
    count = failures = 0
    for k in ks:
        for d in iter_consistent_diagrams(n, k):
            record = io.diagram_to_json(d)
            if args.check_roundtrip:
                ok = compute_diagram_fast(realize(t, d)) == d
                record["roundtrip"] = ok
                failures += not ok
            sys.stdout.write(io.dumps(record) + "\n")
            count += 1
    print(f"{count} diagrams", file=sys.stderr)
    if failures:
        print(f"{failures} round-trip failures", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_achievable(args):
    g = io.parse_graph(_read(args.graph))
    found = sorted(enumerate_achievable_diagrams(g), key=io.diagram_sort_key)
    for d in found:
        sys.stdout.write(io.dumps(io.diagram_to_json(d)) + "\n")
    sys.stdout.write(io.dumps({"count": len(found)}) + "\n")


def cmd_render(args):
    d = io.parse_diagram(_read(args.diagram))
    spec = RenderSpec(format=args.format, width=args.width, show_grid=not args.no_grid)
    _emit(args, render_barcode(d, spec))


def build_parser():
    p = argparse.ArgumentParser(prog="dmtrees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a value assignment and classify simplices")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("-f", "--function", required=True)
    s.add_argument("-o", "--out")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("persist", help="persistence diagram of a function")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("-f", "--function", required=True)
    s.add_argument("--oracle", action="store_true", help="use the persistent-Betti route")
    s.add_argument("-o", "--out")
    s.set_defaults(run=cmd_persist)

    s = sub.add_parser("realize", help="function on a tree with a given diagram")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("-d", "--diagram", required=True)
    s.add_argument("-o", "--out")
    s.add_argument("--randomize-choices", type=int, metavar="SEED")
    s.set_defaults(run=cmd_realize)

    s = sub.add_parser("count", help="upper bound on the number of barcodes")
    s.add_argument("--simplices", type=int, required=True)
    s.add_argument("--pairs", type=int, required=True)
    s.add_argument("--betti1", type=int)
    s.add_argument("-o", "--out")
    s.set_defaults(run=cmd_count)

    s = sub.add_parser("equiv", help="compare two functions on one graph")
    s.add_argument("-g", "--graph", required=True)
    s.add_argument("--relation", choices=sorted(RELATIONS), required=True)
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("-o", "--out")
    s.set_defaults(run=cmd_equiv)

    s = sub.add_parser("enumerate", help="stream the consistent diagrams of a tree")
    s.add_argument("--tree", required=True)
    s.add_argument("--pairs", type=int)
    s.add_argument("--check-roundtrip", action="store_true")
    s.set_defaults(run=cmd_enumerate)

    s = sub.add_parser("achievable", help="stream every diagram some function induces")
    s.add_argument("--graph", required=True)
    s.set_defaults(run=cmd_achievable)

    s = sub.add_parser("render", help="draw a barcode")
    s.add_argument("-d", "--diagram", required=True)
    s.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    s.add_argument("--width", type=int)
    s.add_argument("--no-grid", action="store_true")
    s.add_argument("-o", "--out")
    s.set_defaults(run=cmd_render)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.run(args)
        return EXIT_OK if code is None else code
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (InconsistentDiagram, TooManyPairs) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (MorseError, io.ParseError, GraphError, RealizationError, DifferentGraphs,
            SizeGuardError, RenderError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
