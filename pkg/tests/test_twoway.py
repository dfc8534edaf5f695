import pytest
from hypothesis import given, strategies as st

from conftest import connected_multigraphs
from multieuler import (
    GraphError,
    MultiGraph,
    classify,
    count_matrix,
    degree_profile,
    double,
    expand_multiplicity,
    from_edge_list,
    generate,
    is_two_way,
    is_weakly_connected,
)
from multieuler.twoway import FamilySpec, prufer_to_tree


def test_double_examples():
    p2 = generate(FamilySpec("post", 2))
    assert double(p2).edges == ((0, 1), (1, 0))
    loop = MultiGraph(1, ((0, 0),))
    assert double(loop).edges == ((0, 0), (0, 0))
    p3 = double(generate(FamilySpec("post", 3)))
    assert p3.m == 4 and classify(p3).is_circuit


def test_expand_multiplicity():
    p2 = generate(FamilySpec("post", 2))
    assert expand_multiplicity(p2, {(0, 1): 2}).edges == ((0, 1), (0, 1))
    p3 = generate(FamilySpec("post", 3))
    assert expand_multiplicity(p3, {(0, 1): 1, (2, 1): 3}).m == 4
    with pytest.raises(GraphError):
        expand_multiplicity(p3, {(0, 1): 0, (1, 2): 1})
    with pytest.raises(GraphError):
        expand_multiplicity(p3, {(0, 1): 1})
    with pytest.raises(GraphError):
        expand_multiplicity(MultiGraph(2, ((0, 1), (1, 0))), {(0, 1): 1})


def test_family_edges():
    assert generate(FamilySpec("post", 4)).edges == ((0, 1), (1, 2), (2, 3))
    assert generate(FamilySpec("asterisk", 4)).edges == ((0, 1), (0, 2), (0, 3))
    assert generate(FamilySpec("circuit", 4)).edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    k3 = generate(FamilySpec("complete", 3))
    c3 = generate(FamilySpec("circuit", 3))
    norm = lambda g: sorted(tuple(sorted(e)) for e in g.edges)
    assert norm(k3) == norm(c3)
    assert generate(FamilySpec("complete", 5)).m == 10


def test_family_with_mu():
    g = generate(FamilySpec("post", 3, mu={(0, 1): 2, (1, 2): 1}))
    assert g.edges == ((0, 1), (0, 1), (1, 2))
    assert not FamilySpec("post", 3, mu={(0, 1): 2, (1, 2): 1}).unit_multiplicity


@pytest.mark.parametrize(
    "family, n", [("post", 1), ("asterisk", 1), ("circuit", 2), ("complete", 1), ("bogus", 4)]
)
def test_family_minimums(family, n):
    with pytest.raises(GraphError):
        FamilySpec(family, n)


def test_seeded_families_need_seed():
    with pytest.raises(GraphError):
        FamilySpec("tree", 4)
    with pytest.raises(GraphError):
        FamilySpec("random", 4)


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_tree_generation(n, seed):
    g = generate(FamilySpec("tree", n, seed=seed))
    assert g.m == n - 1
    assert g.is_connected()
    assert generate(FamilySpec("tree", n, seed=seed)) == g


def test_prufer_bijection_small():
    # every labeled tree on 4 vertices appears exactly once (Cayley: 16)
    from itertools import product
    trees = {tuple(sorted(prufer_to_tree(list(s), 4))) for s in product(range(4), repeat=2)}
    assert len(trees) == 16


@given(st.integers(1, 8), st.integers(0, 10**6), st.integers(0, 10))
def test_random_family_connected(n, seed, slack):
    g = generate(FamilySpec("random", n, seed=seed, max_edges=n - 1 + slack))
    assert g.is_connected()
    assert g.m <= n - 1 + slack


def test_is_two_way_examples():
    assert not is_two_way(from_edge_list(3, [(0, 1), (1, 2), (2, 0)]))
    disjoint = double(MultiGraph(4, ((0, 1), (2, 3))))
    assert not is_two_way(disjoint)
    assert is_two_way(double(generate(FamilySpec("complete", 4))))


@given(connected_multigraphs(max_n=7, max_m=12))
def test_doubled_graphs(g):
    d = double(g)
    assert is_two_way(d)
    prof = degree_profile(d)
    mat = count_matrix(d)
    assert prof.tau == prof.eta
    assert sum(prof.tau) == 2 * g.m
    for x in range(d.n):
        assert prof.tau[x] == sum(mat[x]) == sum(row[x] for row in mat) == prof.eta[x]
    if d.m:
        assert classify(d).is_circuit


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8))
))
def test_two_way_iff_connected(case):
    n, edges = case
    g = MultiGraph(n, tuple(edges))
    d = double(g)
    if len(d.non_isolated()) == n:
        assert is_two_way(d) == is_weakly_connected(d) == g.is_connected()
