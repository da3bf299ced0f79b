"""Counting persistence classes: closed forms and exhaustive enumeration."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import NamedTuple

from . import _guards
from .graph import betti_numbers, is_connected
from .persistence import PersistenceDiagram

SEARCH_MAX_SIMPLICES = 14


class CountQuery(NamedTuple):
    n: int
    b1: int
    k: int

    @property
    def m(self):
        return 1 + self.b1 + 2 * self.k


def upper_bound_general(n, b1, k):
    """Number of barcodes with b1 cycle births and k finite pairs on n simplices."""
    q = CountQuery(n, b1, k)
    if min(q) < 0:
        raise ValueError("n, b1 and k must be non-negative")
    if q.m > n:
        raise ValueError(f"m = 1 + b1 + 2k = {q.m} exceeds n = {n}")
    total = math.comb(n - 1, b1)
    for i in range(k):
        total *= math.comb(n - 1 - b1 - 2 * i, 2)
    quotient, rest = divmod(total, math.factorial(k))
    assert rest == 0
    return quotient


def upper_bound_tree(n, k):
    """(n-1)(n-2)...(n-2k) / (2^k k!)."""
    if k < 0 or 2 * k + 1 > n:
        raise ValueError(f"need 2k + 1 <= n, got n={n}, k={k}")
    quotient, rest = divmod(math.perm(n - 1, 2 * k), 2**k * math.factorial(k))
    assert rest == 0
    return quotient


def _pairings(times):
    """All ways to split a sorted list into (smaller, larger) pairs."""
    if not times:
        yield ()
        return
    first, rest = times[0], times[1:]
    for i, partner in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield ((first, partner),) + tail


def iter_consistent_diagrams(n, k):
    if k < 0 or 2 * k + 1 > n:
        raise ValueError(f"need 2k + 1 <= n, got n={n}, k={k}")
    for times in itertools.combinations(range(1, n), 2 * k):
        for pairs in _pairings(list(times)):
            yield PersistenceDiagram(pairs)


def enumerate_consistent_diagrams(n, k):
    return list(iter_consistent_diagrams(n, k))


# -- exhaustive search ------------------------------------------------------
#
# A flat Morse function is the same thing as a build sequence of moves:
# add a critical vertex, add a critical edge between present vertices, or
# add a (vertex, edge) pair hanging off a present vertex.  The diagram only
# depends on the order of critical moves, so we search over "rank diagrams"
# (event times 0..m-1) and spread them over {0..n-1} afterwards.


def _rank_diagrams(g):
    verts = list(g.vertices)
    vpos = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    edges = [(vpos[a], vpos[b]) for a, b in g.edges]
    full = (1 << (nv + len(edges))) - 1
    b1 = betti_numbers(g)[1]

    @lru_cache(maxsize=None)
    def suffixes(mask, labels, r):
        if mask == full:
            return frozenset({(("m", r),)})
        out = set()

        def emit(event, sub):
            for tail in sub:
                out.add(tuple(sorted(tail + (event,))) if event else tail)

        for i in range(nv):
            if not mask >> i & 1:
                new_labels = labels[:i] + (r,) + labels[i + 1:]
                emit(None, suffixes(mask | 1 << i, new_labels, r + 1))
        for j, (a, b) in enumerate(edges):
            bit = 1 << (nv + j)
            if mask & bit:
                continue
            has_a, has_b = mask >> a & 1, mask >> b & 1
            if has_a and has_b:
                la, lb = labels[a], labels[b]
                if la == lb:
                    emit(("h", r), suffixes(mask | bit, labels, r + 1))
                else:
                    old, young = min(la, lb), max(la, lb)
                    merged = tuple(old if x == young else x for x in labels)
                    emit(("p", young, r), suffixes(mask | bit, merged, r + 1))
            elif has_a or has_b:
                u, v = (a, b) if has_a else (b, a)
                new_labels = labels[:v] + (labels[u],) + labels[v + 1:]
                emit(None, suffixes(mask | bit | 1 << v, new_labels, r))
        return frozenset(out)

    results = suffixes(0, (-1,) * nv, 0)
    suffixes.cache_clear()
    diagrams = set()
    for events in results:
        m = next(x[1] for x in events if x[0] == "m")
        pairs = tuple(sorted((x[1], x[2]) for x in events if x[0] == "p"))
        cycles = tuple(sorted(x[1] for x in events if x[0] == "h"))
        if m != 1 + b1 + 2 * len(pairs) or len(cycles) != b1:
            raise AssertionError(f"parity identity fails: m={m}, b1={b1}, k={len(pairs)}")
        diagrams.add((m, pairs, cycles))
    return diagrams


def _spread(rank_diagrams, n):
    out = set()
    for m, pairs, cycles in rank_diagrams:
        for chosen in itertools.combinations(range(1, n), m - 1):
            when = (0,) + chosen
            out.add(PersistenceDiagram(
                tuple((when[b], when[d]) for b, d in pairs),
                (0,),
                tuple(when[c] for c in cycles),
            ))
    return out


def _check_search_input(g):
    _guards.check(g.n_simplices, SEARCH_MAX_SIMPLICES, "enumerate_achievable_diagrams")
    if not is_connected(g):
        raise ValueError("enumerate_achievable_diagrams needs a connected graph")


def enumerate_achievable_diagrams(g):
    """Every diagram induced by some Morse function on the connected graph ``g``."""
    _check_search_input(g)
    return _spread(_rank_diagrams(g), g.n_simplices)


def rank_diagrams(g):
    """Achievable diagrams with event times compressed to 0..m-1."""
    _check_search_input(g)
    return _rank_diagrams(g)


# -- field-first enumeration (slow, independent cross-check) -----------------

def discrete_vector_fields(g):
    """All matchings of vertices to incident edges, acyclic or not."""
    verts = list(g.vertices)

    def rec(i, used):
        if i == len(verts):
            yield ()
            return
        v = verts[i]
        yield from rec(i + 1, used)
        for w in g.neighbors(v):
            e = (v, w) if v < w else (w, v)
            if e not in used:
                for rest in rec(i + 1, used | {e}):
                    yield ((v, e),) + rest

    yield from rec(0, frozenset())


def achievable_by_vector_fields(g):
    """Same set as :func:`enumerate_achievable_diagrams`, found by brute force.

    For each vector field, every ordering of its nodes (critical simplices
    and matched pairs) is turned into concrete values and run through
    :func:`validate`; surviving functions give rank diagrams.  Only
    practical for very small graphs.
    """
    from fractions import Fraction

    from .morse import MorseError, validate
    from .persistence import compute_diagram_fast

    _check_search_input(g)
    n = g.n_simplices
    ranks = set()
    for field in discrete_vector_fields(g):
        paired = {s for pair in field for s in pair}
        nodes = [(s,) for s in g.simplices() if s not in paired] + [p for p in field]
        for order in itertools.permutations(nodes):
            values = {}
            t = j = 0
            for node in order:
                if len(node) == 1:
                    values[node[0]] = Fraction(t)
                    t, j = t + 1, 0
                else:
                    j += 1
                    values[node[0]] = values[node[1]] = t - 1 + Fraction(j, n + 1)
            if t > n:
                continue
            try:
                f = validate(g, values)
            except MorseError:
                continue
            d = compute_diagram_fast(f)
            ranks.add((len(f.criticals), d.finite_pairs, d.essential_h1))
    return _spread(ranks, n)
