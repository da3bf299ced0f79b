"""JSON formats for graphs, value assignments and diagrams.

Graph:    {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]]}
Function: {"vertex_values": {"0": "0", "1": "9/2"}, "edge_values": {"0-1": "9/2"}}
Diagram:  {"finite_pairs": [[3, 6]], "essential_h0": [0], "essential_h1": []}

Rationals are written as "p" or "p/q" strings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .graph import Graph, GraphError, build_graph, normalize_edge
from .persistence import PersistenceDiagram

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_EDGE_KEY = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


class ParseError(ValueError):
    def __init__(self, path, msg):
        self.path = path
        super().__init__(f"{path}: {msg}")


def parse_rational(x, path="$"):
    if isinstance(x, bool):
        raise ParseError(path, f"expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL.match(x)
        if m:
            num, den = int(m.group(1)), int(m.group(2) or 1)
            if den == 0:
                raise ParseError(path, f"zero denominator in {x!r}")
            return Fraction(num, den)
    raise ParseError(path, f"unparseable rational {x!r}")


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load(text):
    if isinstance(text, (dict, list)):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("$", f"malformed JSON ({exc.msg} at line {exc.lineno})") from None


def _require(obj, key, kind, path="$"):
    if not isinstance(obj, dict):
        raise ParseError(path, "expected an object")
    if key not in obj:
        raise ParseError(path, f"missing key {key!r}")
    if not isinstance(obj[key], kind):
        raise ParseError(f"{path}.{key}", f"expected {kind.__name__}")
    return obj[key]


def _int(x, path):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(path, f"expected an integer, got {x!r}")
    return x


# -- graphs ----------------------------------------------------------------

def parse_graph(text) -> Graph:
    obj = _load(text)
    verts = [_int(v, f"$.vertices[{i}]") for i, v in enumerate(_require(obj, "vertices", list))]
    edges = []
    for i, e in enumerate(_require(obj, "edges", list)):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"$.edges[{i}]", "expected a pair of vertex ids")
        edges.append((_int(e[0], f"$.edges[{i}][0]"), _int(e[1], f"$.edges[{i}][1]")))
    try:
        return build_graph(verts, edges)
    except GraphError as exc:
        raise ParseError("$", str(exc)) from None


def graph_to_json(g: Graph):
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


# -- functions -------------------------------------------------------------

def parse_function(text):
    """Raw ``simplex -> Fraction`` map; run it through ``morse.validate``."""
    obj = _load(text)
    out = {}
    for key, val in _require(obj, "vertex_values", dict).items():
        path = f"$.vertex_values[{key!r}]"
        if not re.fullmatch(r"\s*\d+\s*", key):
            raise ParseError(path, "vertex key must be a non-negative integer")
        out[int(key)] = parse_rational(val, path)
    for key, val in _require(obj, "edge_values", dict).items():
        path = f"$.edge_values[{key!r}]"
        m = _EDGE_KEY.match(key)
        if not m:
            raise ParseError(path, "edge key must look like 'u-v'")
        try:
            e = normalize_edge(int(m.group(1)), int(m.group(2)))
        except GraphError as exc:
            raise ParseError(path, str(exc)) from None
        out[e] = parse_rational(val, path)
    return out


def function_to_json(values):
    """Accepts a raw value map or a validated ``MorseFunction``."""
    if not isinstance(values, dict):
        values = values.values
    vertex = {s: v for s, v in values.items() if not isinstance(s, tuple)}
    edge = {s: v for s, v in values.items() if isinstance(s, tuple)}
    return {
        "vertex_values": {str(v): format_rational(vertex[v]) for v in sorted(vertex)},
        "edge_values": {f"{a}-{b}": format_rational(edge[(a, b)]) for a, b in sorted(edge)},
    }


# -- diagrams --------------------------------------------------------------

def _time(x, path):
    r = parse_rational(x, path)
    return int(r) if r.denominator == 1 else r


def parse_diagram(text) -> PersistenceDiagram:
    obj = _load(text)
    pairs = []
    for i, p in enumerate(_require(obj, "finite_pairs", list)):
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError(f"$.finite_pairs[{i}]", "expected [birth, death]")
        pairs.append((_time(p[0], f"$.finite_pairs[{i}][0]"), _time(p[1], f"$.finite_pairs[{i}][1]")))
    h0 = [_time(x, f"$.essential_h0[{i}]") for i, x in enumerate(obj.get("essential_h0", [0]))]
    h1 = [_time(x, f"$.essential_h1[{i}]") for i, x in enumerate(obj.get("essential_h1", []))]
    return PersistenceDiagram(tuple(pairs), tuple(h0), tuple(h1))


def _time_json(x):
    return x if isinstance(x, int) else format_rational(x)


def diagram_to_json(d: PersistenceDiagram):
    return {
        "finite_pairs": [[_time_json(b), _time_json(t)] for b, t in d.finite_pairs],
        "essential_h0": [_time_json(x) for x in d.essential_h0],
        "essential_h1": [_time_json(x) for x in d.essential_h1],
    }


def diagram_sort_key(d: PersistenceDiagram):
    return (len(d.essential_h1), d.essential_h1, d.k, d.finite_pairs)


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"))
