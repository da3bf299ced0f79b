"""Four ways of declaring two Morse functions on one graph equivalent."""

from __future__ import annotations

from .graph import betti_numbers, graph_isomorphic
from .morse import MorseFunction, filtration, gradient_vector_field
from .persistence import compute_diagram_fast, diagram_equal


class DifferentGraphs(ValueError):
    pass


def _same_graph(f, g):
    if f.graph != g.graph:
        raise DifferentGraphs("functions live on different graphs")


def persistence_equivalent(f: MorseFunction, g: MorseFunction) -> bool:
    _same_graph(f, g)
    return diagram_equal(compute_diagram_fast(f), compute_diagram_fast(g))


def forman_equivalent(f: MorseFunction, g: MorseFunction) -> bool:
    _same_graph(f, g)
    return gradient_vector_field(f) == gradient_vector_field(g)


def homologically_equivalent(f: MorseFunction, g: MorseFunction) -> bool:
    """Same number of critical values and equal (b0, b1) level by level."""
    _same_graph(f, g)
    a, c = filtration(f).subcomplexes, filtration(g).subcomplexes
    if len(a) != len(c):
        return False
    return all(betti_numbers(x) == betti_numbers(y) for x, y in zip(a, c))


def graph_equivalent(f: MorseFunction, g: MorseFunction) -> bool:
    """Level subcomplexes at the i-th critical values are isomorphic for every i."""
    _same_graph(f, g)
    a, c = filtration(f).subcomplexes, filtration(g).subcomplexes
    if len(a) != len(c):
        return False
    return all(graph_isomorphic(x, y) for x, y in zip(a, c))


RELATIONS = {
    "persistence": persistence_equivalent,
    "forman": forman_equivalent,
    "homological": homologically_equivalent,
    "graph": graph_equivalent,
}


def verdicts(f, g):
    return {name: rel(f, g) for name, rel in RELATIONS.items()}
