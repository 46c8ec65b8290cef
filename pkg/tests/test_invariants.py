import pytest
from hypothesis import given, strategies as st

import oracles
from status_lab.enumeration import enumerate_connected_graphs, enumerate_trees, random_tree
from status_lab.errors import NotATree, TooLarge
from status_lab.families import make_A, make_caterpillar, make_cycle, make_dumbbell, make_path, make_star
from status_lab.graph import graph_from_edges, relabel
from status_lab.invariants import (
    domination_number_bruteforce,
    domination_number_tree,
    is_dominating,
    is_matching,
    matching_number_bruteforce,
    matching_number_tree,
)


def test_matching_tree_examples():
    assert matching_number_tree(make_path(6)).size == 3
    assert matching_number_tree(make_star(7)).size == 1
    a94 = make_A(9, 4)
    assert oracles.matching_number(a94) == 4
    assert matching_number_tree(a94).size == 4


def test_domination_tree_examples():
    assert domination_number_tree(make_path(9)).size == 3
    assert domination_number_tree(make_star(5)).size == 1
    a104 = make_A(10, 4)
    assert oracles.domination_number(a104) == 4
    assert domination_number_tree(a104).size == 4


def test_bruteforce_examples():
    assert matching_number_bruteforce(make_cycle(5)).size == 2
    assert matching_number_bruteforce(make_cycle(6)).size == 3
    d = make_dumbbell(8, 3, 2)
    assert matching_number_bruteforce(d).size == 2
    # diameter d = n - p - q + 2 = 5 on the diametral path, m = floor(d/2)
    assert matching_number_bruteforce(d).size == (8 - 3 - 2 + 2) // 2
    assert domination_number_bruteforce(make_cycle(7)).size == 3
    assert domination_number_bruteforce(make_star(6)).size == 1
    assert domination_number_bruteforce(make_caterpillar(8, 2, 2)).size == 4


def test_witnesses_are_valid():
    g = make_caterpillar(12, 3, 3)
    for res in (matching_number_tree(g), matching_number_bruteforce(g)):
        assert is_matching(g, res.witness) and len(res.witness) == res.size
    for res in (domination_number_tree(g), domination_number_bruteforce(g)):
        assert is_dominating(g, res.witness) and len(res.witness) == res.size


def test_bruteforce_domination_is_lexicographically_first():
    assert domination_number_bruteforce(make_path(3)).witness == (1,)
    assert domination_number_bruteforce(make_cycle(6)).witness == (0, 3)


def test_tree_dps_reject_non_trees():
    with pytest.raises(NotATree):
        matching_number_tree(make_cycle(4))
    with pytest.raises(NotATree):
        domination_number_tree(make_cycle(4))


def test_bruteforce_budgets():
    k = graph_from_edges(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
    with pytest.raises(TooLarge):
        matching_number_bruteforce(k)
    with pytest.raises(TooLarge):
        domination_number_bruteforce(make_path(21))


def test_single_vertex():
    one = graph_from_edges(1, [])
    assert matching_number_tree(one).size == 0
    assert domination_number_tree(one).size == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_dp_matches_oracles(n):
    for t in enumerate_trees(n):
        assert matching_number_tree(t).size == matching_number_bruteforce(t).size == oracles.matching_number(t)
        assert domination_number_tree(t).size == domination_number_bruteforce(t).size == oracles.domination_number(t)


@pytest.mark.parametrize("n", range(2, 7))
def test_connected_graph_number_relations(n):
    for g in enumerate_connected_graphs(n):
        m = matching_number_bruteforce(g).size
        gamma = domination_number_bruteforce(g).size
        assert gamma <= m <= n // 2
        assert m == oracles.matching_number(g)


@given(st.integers(2, 60), st.integers(0, 2**32), st.randoms(use_true_random=False))
def test_tree_dps_are_root_independent(n, seed, rnd):
    t = random_tree(n, seed)
    perm = list(range(n))
    rnd.shuffle(perm)
    u = relabel(t, perm)
    assert matching_number_tree(u).size == matching_number_tree(t).size
    assert domination_number_tree(u).size == domination_number_tree(t).size


@given(st.integers(2, 16), st.integers(0, 2**32))
def test_random_tree_dp_vs_bruteforce(n, seed):
    t = random_tree(n, seed)
    gamma = domination_number_tree(t).size
    m = matching_number_tree(t).size
    assert gamma == domination_number_bruteforce(t).size
    assert m == matching_number_bruteforce(t).size
    assert gamma <= m <= n // 2
