"""The six end-to-end acceptance criteria.

Each test records a one-line PASS/FAIL verdict that pytest prints in an
"acceptance criteria" section at the end of the run, then asserts.
Run on its own with ``pytest tests/test_acceptance.py``.
"""

import math
import random
import time
from fractions import Fraction as F
from pathlib import Path

from dmtrees import corpus, io
from dmtrees.counting import (
    enumerate_achievable_diagrams,
    iter_consistent_diagrams,
    rank_diagrams,
    upper_bound_general,
    upper_bound_tree,
)
from dmtrees.equivalence import verdicts
from dmtrees.generate import random_connected_graph, random_morse_function, random_tree
from dmtrees.graph import (
    betti_numbers,
    build_graph,
    cycle_graph,
    distance,
    nonisomorphic_trees,
    star_graph,
)
from dmtrees.morse import MorseError, check_morse_inequalities, validate
from dmtrees.persistence import PersistenceDiagram, compute_diagram_fast, compute_diagram_oracle
from dmtrees.realization import extend_from_vertex, realize

DATA = Path(__file__).parent / "data"


def _read(name):
    return (DATA / name).read_text(encoding="utf-8")


def _min_vertices(b1):
    """Fewest vertices of a simple connected graph with b1 independent cycles."""
    nv = 1
    while (nv - 1) * (nv - 2) // 2 < b1:
        nv += 1
    return nv


# 1 -----------------------------------------------------------------------------

def test_criterion_1_worked_example(acceptance_report):
    start = time.perf_counter()
    tree = io.parse_graph(_read("worked_tree.json"))
    f = validate(tree, io.parse_function(_read("worked_function.json")))
    got = compute_diagram_fast(f)
    expected = PersistenceDiagram(((3, 6), (5, 10), (9, 11), (14, 16), (15, 20)), (0,), ())
    back = compute_diagram_fast(realize(tree, got))
    elapsed = time.perf_counter() - start

    ok = got == expected and back == expected and elapsed < 1
    acceptance_report(1, ok, f"persist gives {got}; realize round trip {'equal' if back == expected else 'differs'}; {elapsed:.2f}s < 1s")
    assert got == expected
    assert back == expected
    assert elapsed < 1


# 2 -----------------------------------------------------------------------------

def test_criterion_2_realization_and_sharpness(acceptance_report):
    start = time.perf_counter()
    shapes = [t for nv in range(1, 7) for t in nonisomorphic_trees(nv)]
    count_mismatch, roundtrip_failures, diagrams = [], 0, 0
    for t in shapes:
        n = t.n_simplices
        for k in range(len(t.edges) + 1):
            expected = math.perm(n - 1, 2 * k) // (2**k * math.factorial(k))
            seen = 0
            for d in iter_consistent_diagrams(n, k):
                seen += 1
                if compute_diagram_fast(realize(t, d)) != d:
                    roundtrip_failures += 1
            diagrams += seen
            if seen != expected or seen != upper_bound_tree(n, k):
                count_mismatch.append((n, k, seen, expected))
    elapsed = time.perf_counter() - start
    spot = (upper_bound_tree(5, 1), upper_bound_tree(11, 5))

    ok = (len(shapes) == 14 and not count_mismatch and roundtrip_failures == 0
          and spot == (6, 945) and elapsed < 60)
    acceptance_report(
        2, ok,
        f"{len(shapes)} shapes, {diagrams} diagrams, {len(count_mismatch)} count mismatches, "
        f"{roundtrip_failures} round-trip failures, {elapsed:.1f}s < 60s",
    )
    assert len(shapes) == 14
    assert spot == (6, 945)
    assert not count_mismatch
    assert roundtrip_failures == 0
    assert elapsed < 60


# 3 -----------------------------------------------------------------------------

def test_criterion_3_oracle_equivalence(acceptance_report):
    rng = random.Random(3)
    start = time.perf_counter()
    cases, disagreements, per_b1 = 0, 0, {b: 0 for b in range(4)}
    while cases < 1200:
        b1 = cases % 4
        max_vertices = (14 - b1 + 1) // 2  # 2V - 1 + b1 <= 14
        nv = rng.randint(_min_vertices(b1), max_vertices)
        g = random_connected_graph(rng, nv, b1)
        assert g.n_simplices <= 14 and betti_numbers(g) == (1, b1)
        f = random_morse_function(g, rng)
        disagreements += compute_diagram_fast(f) != compute_diagram_oracle(f)
        per_b1[b1] += 1
        cases += 1
    elapsed = time.perf_counter() - start

    ok = disagreements == 0 and min(per_b1.values()) > 0 and elapsed < 60
    acceptance_report(3, ok, f"{cases} functions (per b1: {per_b1}), {disagreements} disagreements, {elapsed:.1f}s < 60s")
    assert disagreements == 0
    assert min(per_b1.values()) > 0
    assert elapsed < 60


# 4 -----------------------------------------------------------------------------

def test_criterion_4_c6_not_sharp(acceptance_report):
    start = time.perf_counter()
    found = enumerate_achievable_diagrams(cycle_graph(6))
    elapsed = time.perf_counter() - start
    early = [d for d in found if d.essential_h1 == (1,)]
    early_with_pairs = [d for d in early if d.finite_pairs]
    bound = sum(upper_bound_general(12, 1, k) for k in range(6))
    displayed = corpus.cycle_barcode()

    ok = (len(early) == 1 and not early_with_pairs and displayed not in found
          and len(found) < bound and elapsed < 300)
    acceptance_report(
        4, ok,
        f"{len(found)} achievable < bound {bound}; {len(early)} with cycle born at 1 "
        f"({len(early_with_pairs)} carrying finite pairs); {elapsed:.1f}s < 300s",
    )
    assert len(early) == 1
    assert not early_with_pairs
    assert displayed not in found
    assert len(found) < bound
    assert elapsed < 300


# 5 -----------------------------------------------------------------------------

CLAIMED = {
    "A": {"persistence": True, "forman": False},
    "B": {"forman": True, "persistence": False},
    "C": {"homological": True, "persistence": False},
    "D": {"graph": True, "persistence": False},
    "E": {"persistence": True, "graph": False},
}


def test_criterion_5_equivalence_corpus(acceptance_report):
    start = time.perf_counter()
    outcome = {}
    for label, (g, fv, gv) in corpus.equivalence_pairs().items():
        try:
            got = verdicts(validate(g, fv), validate(g, gv))
        except MorseError as exc:
            outcome[label] = f"invalid ({type(exc).__name__})"
            continue
        got = {rel: got[rel] for rel in CLAIMED[label]}
        outcome[label] = "ok" if got == CLAIMED[label] else f"got {got}"
    elapsed = time.perf_counter() - start

    failing = sorted(k for k, v in outcome.items() if v != "ok")
    ok = not failing and elapsed < 1
    detail = "; ".join(f"{k}: {v}" for k, v in sorted(outcome.items()))
    acceptance_report(5, ok, f"{detail}; {elapsed:.2f}s < 1s")
    assert not failing, f"pairs whose drawn values do not give the claimed verdicts: {failing}"
    assert elapsed < 1


# 6 -----------------------------------------------------------------------------

def _distance_indexed(t, v, base, n0):
    alpha = [F(base)]
    vals = {}
    for u in t.vertices:
        d = distance(t, v, u)
        while len(alpha) <= d:
            alpha.append((F(n0) + alpha[-1]) / 2)
        vals[u] = alpha[d]
    for e in t.edges:
        vals[e] = max(vals[e[0]], vals[e[1]])
    return vals


def _search_graphs():
    yield from (t for nv in range(1, 6) for t in nonisomorphic_trees(nv))
    yield from (cycle_graph(n) for n in (3, 4, 5, 6))
    yield build_graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    yield build_graph(range(4), [(a, b) for a in range(4) for b in range(a + 1, 4)])
    yield build_graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def test_criterion_6_invariants(acceptance_report):
    rng = random.Random(6)
    violations = []

    # functions from the random generator
    generated = 0
    for i in range(2000):
        b1 = i % 4
        nv = rng.randint(_min_vertices(b1), (14 - b1 + 1) // 2)
        g = random_connected_graph(rng, nv, b1)
        f = random_morse_function(g, rng)
        report = check_morse_inequalities(f)
        m = len(f.criticals)
        k = compute_diagram_fast(f).k
        if not report.holds or m != 1 + report.b1 + 2 * k:
            violations.append(("generator", f))
        generated += 1

    # every build sequence explored by the exhaustive search
    searched = 0
    for g in _search_graphs():
        b1 = betti_numbers(g)[1]
        for m, pairs, cycles in rank_diagrams(g):
            searched += 1
            if m != 1 + b1 + 2 * len(pairs) or len(cycles) != b1:
                violations.append(("search", g, m))

    # extend_from_vertex on every shape up to 7 vertices and every root
    extended = 0
    trees = [t for nv in range(1, 8) for t in nonisomorphic_trees(nv)]
    trees += [star_graph(s) for s in range(2, 9)]
    trees += [random_tree(rng, rng.randint(2, 12)) for _ in range(50)]
    for t in trees:
        n = t.n_simplices
        for v in t.vertices:
            for n0 in sorted({1, n}):
                vals = extend_from_vertex(t, v, 0, n0)
                extended += 1
                try:
                    f = validate(t, vals)
                except MorseError as exc:
                    violations.append(("extend", t, v, exc))
                    continue
                if f.criticals != ((v, 0),) or max(vals.values()) >= n0:
                    violations.append(("extend", t, v))

    # the distance-indexed labelling breaks flatness on every star with 2+ leaves
    star_breaks = 0
    for s in range(2, 9):
        try:
            validate(star_graph(s), _distance_indexed(star_graph(s), 0, 0, 1))
        except MorseError:
            star_breaks += 1

    ok = not violations and star_breaks == 7
    acceptance_report(
        6, ok,
        f"{generated} generated, {searched} searched rank diagrams, {extended} extensions, "
        f"{len(violations)} violations; distance indexing breaks flatness on {star_breaks}/7 stars",
    )
    assert not violations
    assert star_breaks == 7
