import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from dmtrees import corpus
from dmtrees.graph import betti_numbers, build_graph, cycle_graph, path_graph
from dmtrees.morse import (
    IncompleteValues,
    MinNotZero,
    NonIncidentTie,
    NonIntegerCritical,
    NonMonotone,
    TripleValue,
    ValueOutOfRange,
    check_morse_inequalities,
    critical_parity,
    filtration,
    gradient_vector_field,
    level_subcomplex,
    validate,
)
from strategies import morse_functions, small_graphs, connected_graphs, seeds
from dmtrees.generate import random_morse_function


def path3_first():
    """Path 0-1-2: vertices 0,1,2 and edges 1,3."""
    return validate(path_graph(3), {0: 0, 1: 1, 2: 2, (0, 1): 1, (1, 2): 3})


# -- validate -----------------------------------------------------------------

def test_path3_classification():
    f = path3_first()
    assert f.criticals == ((0, 0), (2, 2), ((1, 2), 3))
    assert f.regular_pairs == {(1, (0, 1))}
    assert (f.m0, f.m1) == (2, 1)


def test_single_vertex():
    f = validate(build_graph([0]), {0: 0})
    assert f.criticals == ((0, 0),)
    assert gradient_vector_field(f).pairs == frozenset()


def test_edge_below_endpoint_is_non_monotone():
    with pytest.raises(NonMonotone):
        validate(path_graph(2), {0: 0, 1: 1, (0, 1): F(1, 2)})


def test_accepts_floats_exactly():
    f = validate(path_graph(2), {0: 0.0, 1: 0.5, (0, 1): 0.5})
    assert f.values[1] == F(1, 2)


def test_worked_example_verbatim(worked_f):
    assert [v for v in worked_f.critical_values] == [0, 3, 5, 6, 9, 10, 11, 14, 15, 16, 20]
    assert (worked_f.m0, worked_f.m1) == (6, 5)
    assert len(worked_f.regular_pairs) == 5


def _mutate(key, value):
    vals = corpus.worked_example_values()
    if value is None:
        del vals[key]
    else:
        vals[key] = F(value)
    return vals


@pytest.mark.parametrize(
    "key, value, error",
    [
        (0, None, IncompleteValues),          # a vertex lost its value
        ((8, 10), None, IncompleteValues),
        (0, F(1, 3), MinNotZero),             # nothing sits at 0 any more
        ((8, 10), 22, ValueOutOfRange),       # above n = 21
        ((8, 10), 21, ValueOutOfRange),       # critical value n is not allowed
        (4, -1, ValueOutOfRange),
        ((2, 3), 1, NonMonotone),             # edge below its endpoint valued 3
        (7, 10, NonIncidentTie),              # collides with edge 5-6
        (7, F(9, 2), TripleValue),            # joins the pair at 9/2
        ((2, 3), F(13, 2), NonIntegerCritical),
        (10, 9, NonIncidentTie),              # two critical vertices at 9
    ],
)
def test_mutations_rejected(key, value, error):
    with pytest.raises(error):
        validate(corpus.worked_example_tree(), _mutate(key, value))


def test_extra_simplex_rejected():
    vals = corpus.worked_example_values()
    vals[(0, 10)] = F(7)
    with pytest.raises(IncompleteValues):
        validate(corpus.worked_example_tree(), vals)


def test_disconnected_graph_is_accepted():
    g = build_graph(range(3), [(0, 1)])
    f = validate(g, {0: 0, 1: 1, (0, 1): 1, 2: 2})
    assert len(f.criticals) == 2
    with pytest.raises(ValueError):
        critical_parity(f)


# -- level subcomplexes and filtrations --------------------------------------

def test_level_subcomplex_extremes(worked_f):
    assert level_subcomplex(worked_f, -1).n_simplices == 0
    assert level_subcomplex(worked_f, 20) == worked_f.graph
    assert level_subcomplex(worked_f, 1000) == worked_f.graph


def test_worked_level_six(worked_f):
    g6 = level_subcomplex(worked_f, 6)
    assert g6.vertices == (0, 1, 2, 3, 4, 5, 6)
    assert sorted(worked_f.values[v] for v in g6.vertices) == [0, 1, 2, 3, 4, F(9, 2), 5]
    assert sorted(worked_f.values[e] for e in g6.edges) == [1, 2, 4, F(9, 2), 6]


def test_path3_filtration_sizes():
    f = path3_first()
    fil = filtration(f)
    assert fil.critical_values == (0, 2, 3)
    expected = [sum(1 for s in f.graph.simplices() if f.values[s] <= c) for c in (0, 2, 3)]
    assert expected == [1, 4, 5]
    assert [g.n_simplices for g in fil.subcomplexes] == expected


def test_filtration_lengths(worked_f):
    assert len(filtration(worked_f).subcomplexes) == 11
    single = validate(build_graph([0]), {0: 0})
    assert len(filtration(single).subcomplexes) == 1


@given(morse_functions())
def test_levels_are_nested(f):
    levels = filtration(f).subcomplexes
    for a, b in zip(levels, levels[1:]):
        assert set(a.simplices()) < set(b.simplices())


# -- gradient fields, inequalities, parity -------------------------------------

def test_all_critical_edge_has_empty_field():
    f = validate(path_graph(2), {0: 0, 1: 1, (0, 1): 2})
    assert gradient_vector_field(f).pairs == frozenset()


def test_path3_field():
    assert gradient_vector_field(path3_first()).pairs == {(1, (0, 1))}


def test_inequalities_examples(worked_f):
    assert tuple(check_morse_inequalities(worked_f)) == (6, 5, 1, 0, True)
    single = validate(build_graph([0]), {0: 0})
    assert tuple(check_morse_inequalities(single)) == (1, 0, 1, 0, True)


def test_parity_examples(worked_f):
    assert critical_parity(worked_f) == 5
    assert critical_parity(validate(build_graph([0]), {0: 0})) == 0
    c3 = validate(cycle_graph(3), {0: 0, 1: 1, 2: 2, (0, 1): 3, (1, 2): 4, (0, 2): 5})
    assert len(c3.criticals) == 6
    assert critical_parity(c3) == 2


@given(morse_functions())
def test_inequalities_and_parity_hold(f):
    report = check_morse_inequalities(f)
    assert report.holds
    m = len(f.criticals)
    assert m == 1 + report.b1 + 2 * critical_parity(f)


@given(morse_functions())
def test_criticals_and_pairs_partition_the_simplices(f):
    n, m = f.graph.n_simplices, len(f.criticals)
    assert len(f.regular_pairs) == (n - m) // 2 and (n - m) % 2 == 0
    covered = [s for s, _ in f.criticals]
    for v, e in f.regular_pairs:
        covered += [v, e]
        assert v in e and f.values[v] == f.values[e]
    assert sorted(map(repr, covered)) == sorted(map(repr, f.graph.simplices()))


@given(small_graphs(), seeds)
def test_generator_handles_disconnected_graphs(g, seed):
    f = random_morse_function(g, random.Random(seed))
    report = check_morse_inequalities(f)
    assert report.holds and report.b0 == betti_numbers(g)[0]
