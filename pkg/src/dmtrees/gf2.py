"""Rank computations over GF(2) with rows packed into Python ints."""

from __future__ import annotations


def rank(rows):
    """GF(2) rank of a matrix given as an iterable of integer bit-rows."""
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                r += 1
                break
    return r


def boundary_rows(vertices, edges):
    """Columns of the vertex/edge boundary map, one bit-row per edge."""
    index = {v: i for i, v in enumerate(vertices)}
    return [(1 << index[u]) | (1 << index[v]) for u, v in edges]


def cycle_rank(vertices, edges):
    """dim Z_1 = |E| - rank(boundary)."""
    return len(edges) - rank(boundary_rows(vertices, edges))


def component_count(vertices, edges):
    """dim H_0 = |V| - rank(boundary)."""
    return len(vertices) - rank(boundary_rows(vertices, edges))


def cycle_basis(vertices, edges):
    """Basis of the cycle space as bitmasks over edge positions."""
    index = {v: i for i, v in enumerate(vertices)}
    pivots: dict[int, tuple[int, int]] = {}
    basis = []
    for k, (u, v) in enumerate(edges):
        row = (1 << index[u]) | (1 << index[v])
        combo = 1 << k
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = (row, combo)
                break
            prow, pcombo = pivots[top]
            row ^= prow
            combo ^= pcombo
        else:
            basis.append(combo)
    return basis
