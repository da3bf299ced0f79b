"""Build a Morse function on a tree whose diagram is a prescribed target.

The tree is cut into ``k + 1`` subtrees by deleting ``k`` edges.  Each
subtree gets exactly one critical vertex (its birth time) and every other
simplex in it is paired; deleted edges are relabelled with the death
times.  All free choices default to smallest-id picks; pass a
``random.Random`` to make them at random instead.
"""

from __future__ import annotations

import random as _random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import GraphError, connected_components, is_tree, normalize_edge
from .morse import MorseFunction, validate
from .persistence import PersistenceDiagram, is_consistent


class RealizationError(ValueError):
    pass


class NotATree(RealizationError):
    pass


class InconsistentDiagram(RealizationError):
    pass


class TooManyPairs(RealizationError):
    pass


@dataclass
class Stage:
    birth: object
    death: object
    tree: list
    base_vertex: int
    bridge: tuple | None
    bound: object


@dataclass
class RealizationPlan:
    removed_edges: list
    stages: list = field(default_factory=list)


def _component_of(t, removed, start):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for w in t.neighbors(x):
            if w not in seen and normalize_edge(x, w) not in removed:
                seen.add(w)
                queue.append(w)
    return seen


def extend_from_vertex(t, v, base, n0, within=None):
    """Values on a tree with ``v`` the only critical simplex and all values < n0.

    Vertices are numbered in BFS discovery order from ``v`` (neighbours in
    ascending id); the i-th discovered vertex gets
    ``alpha_i = (n0 + alpha_{i-1}) / 2`` with ``alpha_0 = base``, and each
    edge takes the larger of its endpoint values.

    ``within`` restricts the walk to a vertex subset (a subtree of a larger
    forest); by default the whole of ``t`` is used and must be a tree.
    """
    base, n0 = Fraction(base), Fraction(n0)
    if not base < n0:
        raise RealizationError(f"base {base} must be below the bound {n0}")
    if within is None:
        if not is_tree(t):
            raise NotATree("extend_from_vertex needs a tree")
        within = set(t.vertices)
    if v not in within:
        raise GraphError(f"vertex {v} is not in the tree")

    values = {v: base}
    parent = {v: None}
    alpha = base
    edges = []
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in t.neighbors(x):
            if w not in within or w == parent[x]:
                continue
            if w in values:
                raise NotATree("cycle found while extending")
            alpha = (n0 + alpha) / 2
            assert values[x] < alpha < n0
            values[w] = alpha
            parent[w] = x
            edges.append(normalize_edge(x, w))
            queue.append(w)
    for e in edges:
        values[e] = max(values[e[0]], values[e[1]])
    return values


def find_bridge(t, removed, labeled_component):
    """Smallest removed edge with exactly one endpoint in the labelled part."""
    candidates = _bridge_candidates({normalize_edge(*e) for e in removed}, set(labeled_component))
    if not candidates:
        raise RealizationError("no removed edge leaves the labelled component")
    return candidates[0]


def _bridge_candidates(removed, labeled):
    return sorted(e for e in removed if (e[0] in labeled) != (e[1] in labeled))


def realize(t, d: PersistenceDiagram, rng: _random.Random | None = None, plan=None) -> MorseFunction:
    """A Morse function on the tree ``t`` with diagram ``d``.

    ``rng`` randomizes every free choice (removed edges, starting subtree,
    bridge, base vertex).  When ``plan`` is a :class:`RealizationPlan`
    it is filled with the stage trace.
    """
    if not is_tree(t):
        raise NotATree("realize needs a tree")
    n = t.n_simplices
    k = len(d.finite_pairs)
    if k > len(t.edges) or 2 * k + 1 > n:
        raise TooManyPairs(f"{k} finite pairs do not fit a tree with {len(t.edges)} edges")
    if not is_consistent(d, n):
        raise InconsistentDiagram(f"diagram {d} is not consistent with a tree on {n} simplices")

    events = sorted([0] + [x for pair in d.finite_pairs for x in pair])
    following = {a: events[i + 1] for i, a in enumerate(events[:-1])}
    following[events[-1]] = n

    edges = list(t.edges)
    removed = set(rng.sample(edges, k) if rng else edges[:k])
    if plan is not None:
        plan.removed_edges = sorted(removed)

    forest = t.remove_edges(removed)
    blocks = connected_components(forest)
    start_block = rng.choice(blocks) if rng else blocks[0]
    v0 = rng.choice(start_block) if rng else start_block[0]
    values = extend_from_vertex(forest, v0, 0, following[0], within=set(start_block))
    labeled = set(start_block)
    if plan is not None:
        plan.stages.append(Stage(0, None, sorted(start_block), v0, None, following[0]))

    pending = set(removed)
    for birth, death in sorted(d.finite_pairs):
        candidates = _bridge_candidates(pending, labeled)
        bridge = rng.choice(candidates) if rng else find_bridge(t, pending, labeled)
        outside = bridge[0] if bridge[1] in labeled else bridge[1]
        block = _component_of(t, removed, outside)
        vi = rng.choice(sorted(block)) if rng else min(block)
        values.update(extend_from_vertex(forest, vi, birth, following[birth], within=block))
        values[bridge] = Fraction(death)
        pending.discard(bridge)
        labeled |= block
        if plan is not None:
            plan.stages.append(Stage(birth, death, sorted(block), vi, bridge, following[birth]))

    assert not pending and labeled == set(t.vertices)
    return validate(t, values)
