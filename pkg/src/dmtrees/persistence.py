"""Persistence diagrams of the filtration induced by a Morse function.

Two independent routes are provided:

* :func:`compute_diagram_fast` sweeps simplices by value with a union-find
  that remembers each component's oldest critical vertex;
* :func:`compute_diagram_oracle` evaluates persistent Betti numbers on
  every pair of filtration steps and recovers pair multiplicities by
  inclusion-exclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _guards, gf2
from .graph import connected_components, is_connected, is_edge
from .morse import MorseFunction, filtration, simplex_key

ORACLE_MAX_SIMPLICES = 64


def _num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class PersistenceDiagram:
    """Degree-0 finite pairs plus essential births in degrees 0 and 1.

    Stored sorted, so ``==`` is multiset equality.
    """

    finite_pairs: tuple = ()
    essential_h0: tuple = (0,)
    essential_h1: tuple = ()

    def __post_init__(self):
        pairs = tuple(sorted((_num(b), _num(d)) for b, d in self.finite_pairs))
        object.__setattr__(self, "finite_pairs", pairs)
        object.__setattr__(self, "essential_h0", tuple(sorted(map(_num, self.essential_h0))))
        object.__setattr__(self, "essential_h1", tuple(sorted(map(_num, self.essential_h1))))

    @property
    def k(self):
        return len(self.finite_pairs)

    def event_times(self):
        times = list(self.essential_h0) + list(self.essential_h1)
        for b, d in self.finite_pairs:
            times += [b, d]
        return sorted(times)

    def __str__(self):
        parts = [f"({b},inf)" for b in self.essential_h0]
        parts += [f"({b},{d})" for b, d in self.finite_pairs]
        parts += [f"H1:({b},inf)" for b in self.essential_h1]
        return "{" + ", ".join(parts) + "}"


class _Components:
    """Union-find (path halving, union by size) carrying each root's oldest birth."""

    def __init__(self):
        self.parent = {}
        self.size = {}
        self.birth = {}

    def add(self, v, birth):
        self.parent[v] = v
        self.size[v] = 1
        self.birth[v] = birth

    def attach(self, v, u):
        """Add v as a regular vertex hanging off u's component."""
        r = self.find(u)
        self.parent[v] = r
        self.size[r] += 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        """Merge two roots; return the birth of the younger component."""
        if self.size[a] < self.size[b]:
            a, b = b, a
        younger = max(self.birth[a], self.birth[b])
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.birth[a] = min(self.birth[a], self.birth[b])
        return younger


def compute_diagram_fast(f: MorseFunction) -> PersistenceDiagram:
    g = f.graph
    if not is_connected(g):
        raise ValueError("compute_diagram_fast needs a connected graph")
    values = f.values
    order = sorted(values, key=lambda s: (values[s], simplex_key(s)))
    critical = {s for s, _ in f.criticals}
    regular_vertex_of = {e: v for v, e in f.regular_pairs}

    uf = _Components()
    finite, h0, h1 = [], [], []
    for s in order:
        t = values[s]
        if not is_edge(s):
            if s in critical:
                uf.add(s, t)
                h0.append(t)
            continue
        if s in regular_vertex_of:
            v = regular_vertex_of[s]
            u = s[0] if s[1] == v else s[1]
            uf.attach(v, u)
            continue
        ra, rb = uf.find(s[0]), uf.find(s[1])
        if ra == rb:
            h1.append(t)
        else:
            dying = uf.union(ra, rb)
            h0.remove(dying)
            finite.append((dying, t))
    return PersistenceDiagram(tuple(finite), tuple(h0), tuple(h1))


def _h0_image_rank(small, large):
    label = {}
    for i, block in enumerate(connected_components(large)):
        for v in block:
            label[v] = i
    return len({label[v] for v in small.vertices})


def _h1_image_rank(small, large):
    # cycles of the smaller complex, re-expressed on the larger edge list
    position = {e: i for i, e in enumerate(large.edges)}
    rows = []
    for combo in gf2.cycle_basis(small.vertices, small.edges):
        row = 0
        for k, e in enumerate(small.edges):
            if combo >> k & 1:
                row |= 1 << position[e]
        rows.append(row)
    return gf2.rank(rows)


def persistent_betti_numbers(f: MorseFunction):
    """Tables ``beta[p][i][j]`` for 0 <= i <= j < m."""
    steps = filtration(f).subcomplexes
    m = len(steps)
    beta = [[[0] * m for _ in range(m)] for _ in range(2)]
    for i in range(m):
        for j in range(i, m):
            beta[0][i][j] = _h0_image_rank(steps[i], steps[j])
            beta[1][i][j] = _h1_image_rank(steps[i], steps[j])
    return beta


def compute_diagram_oracle(f: MorseFunction) -> PersistenceDiagram:
    _guards.check(f.graph.n_simplices, ORACLE_MAX_SIMPLICES, "compute_diagram_oracle")
    cs = f.critical_values
    m = len(cs)
    beta = persistent_betti_numbers(f)

    def b(p, i, j):
        return beta[p][i][j] if i >= 0 else 0

    finite, essential = [], ([], [])
    for p in (0, 1):
        for i in range(m):
            for j in range(i + 1, m):
                mu = (b(p, i, j - 1) - b(p, i, j)) - (b(p, i - 1, j - 1) - b(p, i - 1, j))
                assert mu >= 0, "negative pair multiplicity"
                if mu and p == 1:
                    raise AssertionError("degree-1 class died on a graph")
                finite += [(cs[i], cs[j])] * mu
            mu_inf = b(p, i, m - 1) - b(p, i - 1, m - 1)
            assert mu_inf >= 0
            essential[p].extend([cs[i]] * mu_inf)
    return PersistenceDiagram(tuple(finite), tuple(essential[0]), tuple(essential[1]))


def diagram_equal(d1: PersistenceDiagram, d2: PersistenceDiagram) -> bool:
    return d1 == d2


def is_consistent(d: PersistenceDiagram, n: int) -> bool:
    """Could ``d`` be the diagram of a Morse function on a tree with n simplices?

    Event times live in {1, ..., n-1}; see README for why not n.
    """
    if tuple(d.essential_h0) != (0,) or d.essential_h1:
        return False
    seen = set()
    for b, dth in d.finite_pairs:
        for t in (b, dth):
            if isinstance(t, Fraction) and t.denominator != 1:
                return False
            if not isinstance(t, (int, Fraction)) or not 1 <= t <= n - 1:
                return False
            if t in seen:
                return False
            seen.add(t)
        if not b < dth:
            return False
    return True
