"""
Four notions of "the same function"
===================================

Persistence, Forman, homological and graph equivalence on small trees.
Each pair below separates two of the relations.  The last part replays
the hand-transcribed corpus pairs and shows which of their drawn values
actually support the verdict they were drawn to illustrate.
"""

from fractions import Fraction

from dmtrees import corpus
from dmtrees.equivalence import verdicts
from dmtrees.graph import path_graph, star_graph
from dmtrees.morse import MorseError, validate
from dmtrees.persistence import compute_diagram_fast

P3, P4 = path_graph(3), path_graph(4)

pairs = {
    "same barcode, different gradient": (
        P3,
        {0: 0, 1: 1, (0, 1): 1, 2: 2, (1, 2): 2},
        {1: 0, 0: 1, (0, 1): 1, 2: 2, (1, 2): 2},
    ),
    "same gradient, different barcode": (
        P3,
        {0: 0, 2: 1, 1: 2, (0, 1): 2, (1, 2): 3},
        {0: 0, 1: 1, (0, 1): 1, 2: 2, (1, 2): 3},
    ),
    "same level shapes, different barcode": (
        star_graph(4),
        {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, (0, 1): 1, (0, 2): 2, (0, 3): 3, (0, 4): 5},
        {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, (0, 1): 1, (0, 2): 2, (0, 3): 3, (0, 4): 7},
    ),
    "same barcode, different level shapes": (
        P4,
        {0: 0, 1: 1, (0, 1): 1, 2: 2, (1, 2): 2, 3: 3, (2, 3): 4},
        {0: 0, 1: 1, (0, 1): 1, 3: 3, 2: Fraction(7, 2), (2, 3): Fraction(7, 2), (1, 2): 4},
    ),
}

for name, (graph, a, b) in pairs.items():
    f, g = validate(graph, a), validate(graph, b)
    print(f"{name}:")
    print("   ", compute_diagram_fast(f), "vs", compute_diagram_fast(g))
    print("   ", verdicts(f, g))

# The transcribed corpus.  Invalid drawings are reported, not repaired.
for label, (graph, a, b) in corpus.equivalence_pairs().items():
    try:
        f, g = validate(graph, a), validate(graph, b)
    except MorseError as exc:
        print(f"pair {label}: not a valid Morse function ({type(exc).__name__}: {exc})")
        continue
    print(f"pair {label}:", compute_diagram_fast(f), compute_diagram_fast(g), verdicts(f, g))
