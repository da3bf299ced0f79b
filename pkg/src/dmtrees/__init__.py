"""Persistence of flat discrete Morse functions on graphs, and realization
of barcodes on trees."""

from .graph import (
    Graph,
    GraphError,
    betti_numbers,
    build_graph,
    connected_components,
    distance,
    graph_isomorphic,
    is_tree,
)
from .morse import (
    MorseError,
    MorseFunction,
    check_morse_inequalities,
    critical_parity,
    filtration,
    gradient_vector_field,
    level_subcomplex,
    validate,
)
from .persistence import (
    PersistenceDiagram,
    compute_diagram_fast,
    compute_diagram_oracle,
    diagram_equal,
    is_consistent,
)
from .equivalence import (
    forman_equivalent,
    graph_equivalent,
    homologically_equivalent,
    persistence_equivalent,
)
from .realization import extend_from_vertex, find_bridge, realize
from .counting import (
    enumerate_achievable_diagrams,
    enumerate_consistent_diagrams,
    upper_bound_general,
    upper_bound_tree,
)
from .render import RenderSpec, render_barcode

__version__ = "0.1.0"
