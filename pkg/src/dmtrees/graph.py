"""Finite simple graphs viewed as 1-dimensional simplicial complexes.

A simplex is either a vertex (a non-negative ``int``) or an edge (a
``(u, v)`` tuple with ``u < v``).  Graphs are immutable.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from . import _guards, gf2

ISO_MAX_SIMPLICES = 64


class GraphError(ValueError):
    pass


def normalize_edge(u, v):
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def is_edge(simplex):
    return isinstance(simplex, tuple)


def dimension(simplex):
    return 1 if is_edge(simplex) else 0


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj.values():
            nbrs.sort()
        object.__setattr__(self, "_adj", {v: tuple(n) for v, n in adj.items()})

    @property
    def n_simplices(self):
        return len(self.vertices) + len(self.edges)

    def simplices(self):
        return list(self.vertices) + list(self.edges)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_vertex(self, v):
        return v in self._adj

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def subgraph(self, vertices, edges):
        return build_graph(vertices, edges)

    def remove_edges(self, removed):
        removed = {normalize_edge(*e) for e in removed}
        return Graph(self.vertices, tuple(e for e in self.edges if e not in removed))

    def relabel(self, mapping):
        return build_graph(
            [mapping[v] for v in self.vertices],
            [(mapping[u], mapping[v]) for u, v in self.edges],
        )


def build_graph(vertex_ids, edge_pairs=()):
    """Normalize ids/edges into a :class:`Graph`, collapsing duplicate edges."""
    vertices = set()
    for v in vertex_ids:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise GraphError(f"vertex id must be a non-negative integer, got {v!r}")
        vertices.add(v)
    edges = set()
    for pair in edge_pairs:
        u, v = pair
        e = normalize_edge(u, v)
        for end in e:
            if end not in vertices:
                raise GraphError(f"edge {e} has endpoint {end} outside the vertex set")
        edges.add(e)
    return Graph(tuple(sorted(vertices)), tuple(sorted(edges)))


def path_graph(n):
    return build_graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return build_graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def connected_components(g):
    """Vertex partition into maximal connected blocks, each sorted, blocks by min id."""
    seen = set()
    blocks = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    block.append(w)
                    queue.append(w)
        blocks.append(sorted(block))
    return blocks


def is_connected(g):
    return len(g.vertices) > 0 and len(connected_components(g)) == 1


def betti_numbers(g):
    b0 = len(connected_components(g))
    return b0, len(g.edges) - len(g.vertices) + b0


def _is_acyclic(g):
    # union-find cycle detection, independent of the component count
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_tree(g):
    by_count = is_connected(g) and len(g.vertices) == len(g.edges) + 1
    by_cycles = is_connected(g) and _is_acyclic(g)
    assert by_count == by_cycles, "tree characterizations disagree"
    return by_count


def is_forest(g):
    return _is_acyclic(g)


def is_tree_by_bridges(g):
    """Connected and every edge is a bridge."""
    if not is_connected(g):
        return False
    return all(
        not is_connected(g.remove_edges([e])) for e in g.edges
    )


def distance(g, u, v):
    """Number of edges on a shortest u-v path, or ``None`` if disconnected."""
    for x in (u, v):
        if not g.has_vertex(x):
            raise GraphError(f"unknown vertex {x}")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return None


# -- canonical forms for forests (AHU) --------------------------------------

def _rooted_form(g, root, parent=None):
    kids = sorted(_rooted_form(g, c, root) for c in g.neighbors(root) if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(g, block):
    if len(block) <= 2:
        return list(block)
    deg = {v: g.degree(v) for v in block}
    layer = [v for v in block if deg[v] == 1]
    remaining = len(block)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in g.neighbors(leaf):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_canonical_form(g, block=None):
    """AHU string of an unrooted tree (or of one block of a forest)."""
    if block is None:
        block = g.vertices
    return min(_rooted_form(g, c) for c in _centers(g, block))


def forest_canonical_form(g):
    if not is_forest(g):
        raise GraphError("canonical form is only defined for forests")
    return tuple(sorted(tree_canonical_form(g, b) for b in connected_components(g)))


# -- general isomorphism ----------------------------------------------------

def _invariant(g, v):
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))


def _backtrack(g1, g2):
    inv1 = {v: _invariant(g1, v) for v in g1.vertices}
    inv2 = {v: _invariant(g2, v) for v in g2.vertices}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return False
    # BFS order keeps each new vertex adjacent to something already mapped
    order = []
    seen = set()
    for s in sorted(g1.vertices, key=lambda v: (-g1.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for w in g1.neighbors(x):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    mapping = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in g2.vertices:
            if w in used or inv2[w] != inv1[v]:
                continue
            ok = all(
                g2.has_edge(w, mapping[x]) == g1.has_edge(v, x) for x in mapping
            )
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def graph_isomorphic(g1, g2):
    for g in (g1, g2):
        _guards.check(g.n_simplices, ISO_MAX_SIMPLICES, "graph_isomorphic")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    if sorted(map(g1.degree, g1.vertices)) != sorted(map(g2.degree, g2.vertices)):
        return False
    f1, f2 = is_forest(g1), is_forest(g2)
    if f1 != f2:
        return False
    if f1:
        return forest_canonical_form(g1) == forest_canonical_form(g2)
    return _backtrack(g1, g2)


# -- tree enumeration --------------------------------------------------------

def tree_from_prufer(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return build_graph(range(n), edges)


def labeled_trees(n):
    """All n^(n-2) labeled trees on vertices 0..n-1."""
    if n == 1:
        yield build_graph([0])
        return
    if n == 2:
        yield build_graph([0, 1], [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_prufer(seq, n)


def nonisomorphic_trees(n):
    """One labeled representative per unlabeled tree shape on n vertices."""
    reps = {}
    for t in labeled_trees(n):
        reps.setdefault(tree_canonical_form(t), t)
    return [reps[k] for k in sorted(reps)]


def gf2_betti_numbers(g):
    """Betti numbers from boundary-matrix ranks; cross-check for :func:`betti_numbers`."""
    return (
        gf2.component_count(g.vertices, g.edges),
        gf2.cycle_rank(g.vertices, g.edges),
    )
