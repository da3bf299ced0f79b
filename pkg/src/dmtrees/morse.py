"""Flat discrete Morse functions on graphs.

Values are exact :class:`fractions.Fraction` objects.  A regular
vertex/edge pair is recognised purely by the two simplices sharing a
value; every value attained once is a critical value and must be a
non-negative integer.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graph import Graph, betti_numbers, build_graph, is_connected, is_edge


class MorseError(ValueError):
    """Base class for rejected value assignments."""


class IncompleteValues(MorseError):
    pass


class MinNotZero(MorseError):
    pass


class ValueOutOfRange(MorseError):
    def __init__(self, simplex, value, msg=None):
        self.simplex, self.value = simplex, value
        super().__init__(msg or f"value {value} of {format_simplex(simplex)} is outside [0, n]")


class NonMonotone(MorseError):
    def __init__(self, vertex, edge, fv, fe):
        self.vertex, self.edge = vertex, edge
        super().__init__(
            f"vertex {vertex} has value {fv} above incident edge {edge} with value {fe}"
        )


class TripleValue(MorseError):
    def __init__(self, value, simplices):
        self.value, self.simplices = value, simplices
        super().__init__(
            f"value {value} attained by {len(simplices)} simplices: "
            + ", ".join(map(format_simplex, simplices))
        )


class NonIncidentTie(MorseError):
    def __init__(self, sigma, tau, value):
        self.sigma, self.tau = sigma, tau
        super().__init__(
            f"{format_simplex(sigma)} and {format_simplex(tau)} share value {value} "
            "but are not an incident vertex/edge pair"
        )


class NonIntegerCritical(MorseError):
    def __init__(self, simplex, value):
        self.simplex, self.value = simplex, value
        super().__init__(f"critical {format_simplex(simplex)} has non-integer value {value}")


class ParityViolation(MorseError):
    pass


def format_simplex(s):
    return f"e{s[0]}-{s[1]}" if is_edge(s) else f"v{s}"


def simplex_key(s):
    return (1, s[0], s[1]) if is_edge(s) else (0, s, 0)


@dataclass(frozen=True)
class GradientVectorField:
    pairs: frozenset

    def __contains__(self, pair):
        return pair in self.pairs

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs, key=lambda p: (p[0], p[1])))


@dataclass(frozen=True)
class Filtration:
    critical_values: tuple
    subcomplexes: tuple


class MorseReport(NamedTuple):
    m0: int
    m1: int
    b0: int
    b1: int
    holds: bool


class MorseFunction:
    """A validated flat discrete Morse function.  Build with :func:`validate`."""

    __slots__ = ("graph", "values", "criticals", "regular_pairs")

    def __init__(self, graph, values, criticals, regular_pairs):
        self.graph = graph
        self.values = values
        self.criticals = criticals
        self.regular_pairs = regular_pairs

    def __call__(self, simplex):
        return self.values[simplex]

    def __eq__(self, other):
        return (
            isinstance(other, MorseFunction)
            and self.graph == other.graph
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.graph, frozenset(self.values.items())))

    def __repr__(self):
        crit = ", ".join(f"{format_simplex(s)}:{v}" for s, v in self.criticals)
        return f"MorseFunction(n={self.graph.n_simplices}, criticals=[{crit}])"

    @property
    def critical_values(self):
        return [v for _, v in self.criticals]

    @property
    def critical_simplices(self):
        return [s for s, _ in self.criticals]

    @property
    def m0(self):
        return sum(1 for s, _ in self.criticals if not is_edge(s))

    @property
    def m1(self):
        return sum(1 for s, _ in self.criticals if is_edge(s))

    def is_critical(self, simplex):
        return any(s == simplex for s, _ in self.criticals)

    def vertex_values(self):
        return {v: self.values[v] for v in self.graph.vertices}

    def edge_values(self):
        return {e: self.values[e] for e in self.graph.edges}


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def validate(g: Graph, raw_values) -> MorseFunction:
    """Check every defining condition and classify simplices.

    ``raw_values`` maps each vertex id and each normalized edge tuple to a
    number.  Raises a :class:`MorseError` subclass naming the first
    violated condition.
    """
    simplices = g.simplices()
    missing = [s for s in simplices if s not in raw_values]
    if missing:
        raise IncompleteValues("no value for " + ", ".join(map(format_simplex, missing)))
    extra = set(raw_values) - set(simplices)
    if extra:
        raise IncompleteValues(
            "values given for simplices not in the graph: "
            + ", ".join(map(format_simplex, sorted(extra, key=simplex_key)))
        )
    values = {s: _as_fraction(raw_values[s]) for s in simplices}
    n = g.n_simplices

    for s in simplices:
        if not 0 <= values[s] <= n:
            raise ValueOutOfRange(s, values[s])
    if min(values.values()) != 0:
        raise MinNotZero(f"minimum value is {min(values.values())}, expected 0")

    for e in g.edges:
        for v in e:
            if values[v] > values[e]:
                raise NonMonotone(v, e, values[v], values[e])

    by_value = defaultdict(list)
    for s in simplices:
        by_value[values[s]].append(s)

    criticals = []
    pairs = set()
    for value in sorted(by_value):
        group = by_value[value]
        if len(group) > 2:
            raise TripleValue(value, group)
        if len(group) == 2:
            a, b = sorted(group, key=simplex_key)
            if is_edge(a) or not is_edge(b) or a not in b:
                raise NonIncidentTie(a, b, value)
            pairs.add((a, b))
        else:
            (s,) = group
            if value.denominator != 1:
                raise NonIntegerCritical(s, value)
            if value > n - 1:
                raise ValueOutOfRange(
                    s, value, f"critical value {value} of {format_simplex(s)} exceeds n-1={n - 1}"
                )
            criticals.append((s, value))

    return MorseFunction(g, values, tuple(criticals), frozenset(pairs))


def level_subcomplex(f: MorseFunction, a) -> Graph:
    a = _as_fraction(a)
    g = f.graph
    return build_graph(
        [v for v in g.vertices if f.values[v] <= a],
        [e for e in g.edges if f.values[e] <= a],
    )


def filtration(f: MorseFunction) -> Filtration:
    cs = tuple(f.critical_values)
    return Filtration(cs, tuple(level_subcomplex(f, c) for c in cs))


def gradient_vector_field(f: MorseFunction) -> GradientVectorField:
    return GradientVectorField(f.regular_pairs)


def check_morse_inequalities(f: MorseFunction) -> MorseReport:
    m0, m1 = f.m0, f.m1
    b0, b1 = betti_numbers(f.graph)
    return MorseReport(m0, m1, b0, b1, m0 >= b0 and m1 >= b1 and b0 - b1 == m0 - m1)


def critical_parity(f: MorseFunction) -> int:
    """Return k with m = 1 + b1 + 2k (connected graphs only)."""
    if not is_connected(f.graph):
        raise ValueError("critical_parity needs a connected graph")
    m = len(f.criticals)
    _, b1 = betti_numbers(f.graph)
    twice_k = m - 1 - b1
    if twice_k < 0 or twice_k % 2:
        raise ParityViolation(f"m={m}, b1={b1}: m - 1 - b1 is not a non-negative even number")
    return twice_k // 2
