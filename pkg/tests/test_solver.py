"""Exact chromatic-index search against known values and brute-force facts."""

import pytest
from hypothesis import given, settings

from conftest import assert_proper, small_graphs
from edgecritic.graphs import (
    GraphError,
    complete,
    complete_bipartite,
    complete_minus_matching,
    cube,
    cycle,
    make_graph,
    petersen,
    petersen_minus_vertex,
    prism,
)
from edgecritic.solver import (
    SearchBudgetExceeded,
    chromatic_index,
    classify,
    classify_cached,
    critical_edge_report,
    enumerate_colorings,
    find_coloring,
    find_delta_coloring,
    is_critical_edge,
    vizing_color,
)

KNOWN_INDEX = {
    "k4": (complete(4), 3),
    "k5": (complete(5), 5),
    "k6": (complete(6), 5),
    "k8": (complete(8), 7),
    "k6-pm": (complete_minus_matching(6), 4),  # the octahedron: class 1
    "c5": (cycle(5), 3),
    "c6": (cycle(6), 2),
    "petersen": (petersen(), 4),
    "petersen-v": (petersen_minus_vertex(), 4),
    "k33": (complete_bipartite(3, 3), 3),
    "prism": (prism(), 3),
    "cube": (cube(), 3),
}


@pytest.mark.parametrize("name", sorted(KNOWN_INDEX))
def test_chromatic_index_known(name):
    g, chi = KNOWN_INDEX[name]
    assert chromatic_index(g) == chi


def test_chromatic_index_edgeless():
    assert chromatic_index(make_graph(3, [])) == 0


def test_classify():
    assert classify(cycle(6)) == 1
    assert classify(cycle(5)) == 2
    assert classify(petersen()) == 2
    with pytest.raises(GraphError):
        classify(make_graph(2, []))


def test_classify_cached_consistent():
    g = cycle(7)
    assert classify_cached(g) == classify(g) == classify_cached(g) == 2


def test_find_coloring_basic():
    col = find_coloring(complete_bipartite(3, 3), 3)
    assert col is not None and col.is_full() and col.k == 3
    assert_proper(col)
    assert find_coloring(cycle(5), 2) is None
    assert find_coloring(complete(4), 2) is None  # degree bound alone refutes


def test_find_coloring_hole():
    col = find_coloring(cycle(5), 2, hole=(1, 0))
    assert col is not None
    assert col.uncolored == (0, 1)
    assert_proper(col)
    with pytest.raises(GraphError):
        find_coloring(cycle(5), 2, hole=(0, 2))


def test_find_delta_coloring():
    assert find_delta_coloring(cycle(5)) is None
    col = find_delta_coloring(cube())
    assert col is not None and col.k == 3 and col.is_full()


ENUMERATION_COUNTS = [
    (complete(3), 3, None, 6),
    (cycle(4), 2, None, 2),
    (complete_bipartite(3, 3), 3, None, 12),
    (prism(), 3, None, 6),
    (cube(), 3, None, 24),
    (complete(6), 5, None, 720),
    (petersen_minus_vertex(), 3, (0, 1), 42),
]


@pytest.mark.parametrize("g,k,hole,count", ENUMERATION_COUNTS)
def test_enumeration_counts(g, k, hole, count):
    cols = list(enumerate_colorings(g, k, hole=hole))
    assert len(cols) == count
    texts = set()
    for col in cols:
        assert_proper(col)
        assert col.uncolored == hole
        texts.add(col.to_text())
    assert len(texts) == count  # pairwise distinct


def test_enumeration_deterministic():
    first = [c.to_text() for c in enumerate_colorings(prism(), 3)]
    second = [c.to_text() for c in enumerate_colorings(prism(), 3)]
    assert first == second


def test_enumeration_bad_hole():
    with pytest.raises(GraphError):
        list(enumerate_colorings(cycle(4), 2, hole=(0, 2)))


def test_budget_exhaustion_raises():
    with pytest.raises(SearchBudgetExceeded):
        list(enumerate_colorings(complete(6), 5, budget_ms=1e-6))


def test_no_budget_means_no_deadline():
    # a None budget must finish regardless of wall time
    assert chromatic_index(complete(6)) == 5


# ------------------------------------------------------------ criticality

def test_critical_edges_of_odd_cycle():
    g = cycle(5)
    assert all(is_critical_edge(g, u, v) for u, v in g.sorted_edges())
    ok, crit = critical_edge_report(g)
    assert ok and len(crit) == 5


def test_class_one_graph_is_never_critical():
    g = cycle(6)
    assert not is_critical_edge(g, 0, 1)
    ok, crit = critical_edge_report(g)
    assert not ok and crit == []


def test_petersen_not_edge_critical():
    # class 2, but removing one edge still leaves a class 2 graph
    ok, crit = critical_edge_report(petersen())
    assert not ok and crit == []


def test_petersen_minus_vertex_is_edge_critical():
    g = petersen_minus_vertex()
    ok, crit = critical_edge_report(g)
    assert ok and len(crit) == g.edge_count() == 12


def test_is_critical_edge_rejects_non_edge():
    with pytest.raises(GraphError):
        is_critical_edge(cycle(5), 0, 2)


# ------------------------------------------------------------ constructive

@pytest.mark.parametrize("name", sorted(KNOWN_INDEX))
def test_vizing_color_named(name):
    g, _ = KNOWN_INDEX[name]
    col = vizing_color(g)
    assert col.k == g.max_degree() + 1
    assert col.is_full()
    assert_proper(col)


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_vizing_color_random(g):
    col = vizing_color(g)
    assert col.k == g.max_degree() + 1
    assert col.is_full()
    assert_proper(col)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_solver_agrees_with_spare_color_bound(g):
    chi = chromatic_index(g)
    assert chi in (g.max_degree(), g.max_degree() + 1)
    if chi == g.max_degree():
        assert find_delta_coloring(g) is not None
    else:
        assert find_delta_coloring(g) is None
