import random
from itertools import permutations

import pytest
from hypothesis import given

from conftest import connected_multigraphs, multidigraphs
from multieuler import (
    GraphError,
    Multidigraph,
    common_dicircuit,
    degree_profile,
    from_edge_list,
    is_strongly_connected,
    is_weakly_connected,
    scc,
)
from multieuler.core import is_valid_trail
from multieuler.selftest import universe
from multieuler.twoway import FamilySpec, double, generate
from oracles import reachability


def test_weak_connectivity_examples():
    assert is_weakly_connected(double(generate(FamilySpec("post", 4))))
    assert not is_weakly_connected(from_edge_list(2, [(0, 0), (1, 1)]))
    assert is_weakly_connected(from_edge_list(1, []))
    assert not is_weakly_connected(from_edge_list(3, [(0, 1)]))


def test_scc_examples():
    assert scc(from_edge_list(3, [(0, 1), (1, 2), (2, 0)])).count == 1
    assert scc(from_edge_list(2, [(0, 1)])).count == 2
    part = scc(from_edge_list(3, [(0, 1), (1, 0), (1, 2)]))
    assert part.labels == (0, 0, 1)
    assert part.components() == [[0, 1], [2]]


@given(multidigraphs(max_n=6, max_m=12))
def test_scc_matches_transitive_closure(d):
    r = reachability(d)
    labels = scc(d).labels
    for x in range(d.n):
        for y in range(d.n):
            assert (labels[x] == labels[y]) == (r[x][y] and r[y][x])
    # ids dense and ordered by smallest member
    firsts = []
    for v, c in enumerate(labels):
        if c not in firsts:
            firsts.append(c)
    assert firsts == list(range(scc(d).count))


@given(multidigraphs(max_n=5, max_m=10))
def test_scc_invariant_under_edge_reordering(d):
    edges = list(d.edges)
    random.Random(len(edges)).shuffle(edges)
    assert scc(Multidigraph(d.n, tuple(edges))) == scc(d)


def test_strong_connectivity_examples():
    assert not is_strongly_connected(from_edge_list(2, [(0, 1)]))
    c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    assert is_strongly_connected(c5)
    assert is_strongly_connected(from_edge_list(1, [(0, 0)]))
    assert is_strongly_connected(from_edge_list(1, []))


@given(connected_multigraphs(max_n=6, max_m=10))
def test_doubled_connected_is_strongly_connected(g):
    assert is_strongly_connected(double(g))


def test_common_dicircuit_examples():
    c3 = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    w = common_dicircuit(c3, 0, 2)
    assert sorted(w.edges) == [0, 1, 2]
    assert w.vertices == (0, 1, 2, 0)
    assert common_dicircuit(from_edge_list(2, [(0, 1)]), 0, 1) is None
    p3 = double(generate(FamilySpec("post", 3)))
    w = common_dicircuit(p3, 0, 2)
    assert w.vertices == (0, 1, 2, 1, 0)
    assert is_valid_trail(p3, w.edges, closed=True)


def test_common_dicircuit_rejects_equal_vertices():
    with pytest.raises(GraphError):
        common_dicircuit(from_edge_list(1, [(0, 0)]), 0, 0)


def test_definition_equivalence_exhaustive():
    # strong connectivity <=> every pair has a common closed walk; n <= 4, m <= 6
    checked = 0
    for d in universe(max_n=4, max_m=6):
        witnesses = True
        for x, y in permutations(range(d.n), 2):
            w = common_dicircuit(d, x, y)
            if w is None:
                witnesses = False
                continue
            assert x in w.vertices and y in w.vertices
            assert w.vertices[0] == w.vertices[-1]
            assert is_valid_trail(d, w.edges, closed=True, allow_repeats=True)
        assert is_strongly_connected(d) == witnesses
        checked += 1
    assert checked == 79831


@given(multidigraphs(max_n=5, max_m=10))
def test_balanced_edges_never_cross_components(d):
    prof = degree_profile(d)
    if prof.tau != prof.eta:
        return
    labels = scc(d).labels
    assert all(labels[a] == labels[b] for a, b in d.edges)
