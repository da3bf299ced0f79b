"""Random graphs and random valid Morse functions for property testing."""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import build_graph, normalize_edge
from .morse import validate


def random_tree(rng: random.Random, n_vertices: int):
    edges = [(v, rng.randrange(v)) for v in range(1, n_vertices)]
    perm = list(range(n_vertices))
    rng.shuffle(perm)
    return build_graph(range(n_vertices), [(perm[a], perm[b]) for a, b in edges])


def random_connected_graph(rng: random.Random, n_vertices: int, b1: int):
    """Random spanning tree plus ``b1`` extra edges."""
    t = random_tree(rng, n_vertices)
    missing = [
        (u, v) for u in range(n_vertices) for v in range(u + 1, n_vertices)
        if not t.has_edge(u, v)
    ]
    if b1 > len(missing):
        raise ValueError(f"{n_vertices} vertices cannot carry b1={b1}")
    return build_graph(t.vertices, list(t.edges) + rng.sample(missing, b1))


def random_build_order(g, rng: random.Random):
    """A random legal sequence of moves that assembles ``g``.

    Each move is ``("v", v)`` for a critical vertex, ``("e", e)`` for a
    critical edge, or ``("p", v, e)`` for a vertex paired with the edge
    that attaches it.
    """
    present_v, present_e = set(), set()
    moves = []
    total = g.n_simplices
    while len(present_v) + len(present_e) < total:
        options = {"v": [], "e": [], "p": []}
        for v in g.vertices:
            if v not in present_v:
                options["v"].append(("v", v))
        for e in g.edges:
            if e in present_e:
                continue
            a, b = e
            if a in present_v and b in present_v:
                options["e"].append(("e", e))
            elif a in present_v or b in present_v:
                options["p"].append(("p", b if a in present_v else a, e))
        kinds = [k for k in "vep" if options[k]]
        move = rng.choice(options[rng.choice(kinds)])
        moves.append(move)
        if move[0] == "v":
            present_v.add(move[1])
        elif move[0] == "e":
            present_e.add(move[1])
        else:
            present_v.add(move[1])
            present_e.add(move[2])
    return moves


def values_from_order(g, moves, rng: random.Random | None = None):
    """Turn a build order into exact values.

    Critical moves get distinct integers, 0 first, drawn from {0..n-1}
    (consecutive when ``rng`` is None); paired moves get rationals strictly
    between the surrounding critical values.
    """
    n = g.n_simplices
    m = sum(1 for mv in moves if mv[0] != "p")
    later = sorted(rng.sample(range(1, n), m - 1)) if rng else list(range(1, m))
    times = [0] + later
    values = {}
    crit = -1
    run = []

    def flush(upper):
        lower = times[crit]
        for j, (v, e) in enumerate(run, start=1):
            values[v] = values[e] = lower + Fraction(upper - lower) * j / (len(run) + 1)
        run.clear()

    for mv in moves:
        if mv[0] == "p":
            run.append((mv[1], normalize_edge(*mv[2])))
            continue
        if crit >= 0:
            flush(times[crit + 1])
        crit += 1
        values[mv[1]] = Fraction(times[crit])
    flush(n)
    return values


def random_morse_function(g, rng: random.Random):
    return validate(g, values_from_order(g, random_build_order(g, rng), rng))
