"""Hand-transcribed sample inputs.

The worked tree example and the sample barcodes are used throughout the
tests; the five function pairs are meant to separate the equivalence
relations.

Values are kept exactly as drawn; nothing here is validated on import,
and some of the drawn functions are not valid (see the tests).
"""

from fractions import Fraction

from .graph import build_graph
from .persistence import PersistenceDiagram

F = Fraction


def worked_example_tree():
    # ids follow the order of the final labels 0,1,2,3,4,4.5,5,9,14,14.5,15
    return build_graph(
        range(11),
        [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 8), (5, 7), (5, 6), (8, 9), (8, 10)],
    )


def worked_example_values():
    vertex = [0, 1, 2, 3, 4, F(9, 2), 5, 9, 14, F(29, 2), 15]
    values = {v: F(x) for v, x in enumerate(vertex)}
    values.update({
        (0, 1): F(1), (1, 2): F(2), (2, 3): F(6), (3, 4): F(4), (3, 5): F(9, 2),
        (3, 8): F(16), (5, 7): F(11), (5, 6): F(10), (8, 9): F(29, 2), (8, 10): F(20),
    })
    return values


def worked_example_diagram():
    return PersistenceDiagram(((3, 6), (5, 10), (9, 11), (14, 16), (15, 20)))


def _values(vertex, edge):
    out = {v: F(x) for v, x in vertex.items()}
    out.update({e: F(x) for e, x in edge.items()})
    return out


# 7-vertex tree: 0 on top of hub 1, leaves 2 (left) and 3 (right) on the hub,
# then the chain 1-4-5-6 underneath.
_HUB_TREE = build_graph(range(7), [(0, 1), (1, 4), (1, 2), (1, 3), (4, 5), (5, 6)])

# star with centre 0; leaves numbered top=1, then by position per pair below
_STAR = build_graph(range(5), [(0, 1), (0, 2), (0, 3), (0, 4)])

_PATH3 = build_graph(range(3), [(0, 1), (1, 2)])


def equivalence_pairs():
    """Mapping ``label -> (graph, values_f, values_g)``."""
    return {
        "A": (
            _HUB_TREE,
            _values({0: 0, 1: 1, 2: 2, 3: 4, 4: 6, 5: 7, 6: 9},
                    {(0, 1): 1, (1, 4): 6, (1, 2): 5, (1, 3): 8, (4, 5): 7, (5, 6): 9}),
            _values({0: 0, 1: 2, 2: 3, 3: 9, 4: 4, 5: 6, 6: 7},
                    {(0, 1): 8, (1, 4): 5, (1, 2): 3, (1, 3): 9, (4, 5): 6, (5, 6): 7}),
        ),
        "B": (
            _HUB_TREE,
            _values({0: 0, 1: 3, 2: 2, 3: 1, 4: 4, 5: 5, 6: 7},
                    {(0, 1): 3, (1, 4): 4, (1, 2): 6, (1, 3): 1, (4, 5): 5, (5, 6): 7}),
            _values({0: 0, 1: 1, 2: 5, 3: 5, 4: 2, 5: 3, 6: 4},
                    {(0, 1): 1, (1, 4): 2, (1, 2): 7, (1, 3): 6, (4, 5): 3, (5, 6): 4}),
        ),
        "C": (
            _PATH3,
            _values({0: 0, 1: 1, 2: 2}, {(0, 1): 1, (1, 2): 3}),
            _values({0: 0, 1: 1, 2: 3}, {(0, 1): 2, (1, 2): 3}),
        ),
        # star leaves: 1 top, 2 right, 3 left, 4 bottom
        "D": (
            _STAR,
            _values({0: 0, 1: 1, 2: 2, 3: 3, 4: 4},
                    {(0, 1): 1, (0, 2): 2, (0, 3): 3, (0, 4): 5}),
            _values({0: 0, 1: 1, 2: 2, 3: 3, 4: 4},
                    {(0, 1): 1, (0, 2): 2, (0, 3): 3, (0, 4): 7}),
        ),
        # star leaves: 1 top, 2 left, 3 right, 4 bottom
        "E": (
            _STAR,
            _values({0: 0, 1: 1, 2: 5, 3: 2, 4: 4},
                    {(0, 1): 1, (0, 2): 5, (0, 3): 3, (0, 4): 4}),
            _values({0: 0, 1: 1, 2: 2, 3: 4, 4: 5},
                    {(0, 1): 1, (0, 2): 3, (0, 3): 4, (0, 4): 5}),
        ),
    }


def admissible_barcode():
    """A barcode that some function on an 11-simplex graph induces."""
    return PersistenceDiagram(((2, 5), (4, 7), (3, 8)))


def inadmissible_barcode():
    """Birth and death share time 4, and one birth sits at 6.5."""
    return PersistenceDiagram(((F(13, 2), 8), (4, 7), (3, 4)))


def cycle_barcode():
    """A C6 barcode with the cycle born at time 1 plus two later bars."""
    return PersistenceDiagram(((2, 4), (3, 6)), (0,), (1,))
