from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from cdcrit.domination import (
    gamma_c,
    gamma_c_bruteforce,
    gamma_c_value,
    has_cds_of_size,
    is_cds,
    iter_cds,
    min_cds_family,
)
from cdcrit.errors import CapExceededError, DisconnectedGraphError, EmptyVertexSetError
from cdcrit.families import gen_f
from cdcrit.graph import Graph, add_edge, complete_graph, cycle_graph, disjoint_union, members, path_graph, star_graph

from conftest import graphs, random_graph


def test_is_cds_examples():
    assert is_cds(complete_graph(4), [0])
    c6 = cycle_graph(6)
    assert is_cds(c6, [0, 1, 2, 3])
    assert not is_cds(c6, [0, 1, 2])
    assert not is_cds(c6, [0, 3])
    with pytest.raises(EmptyVertexSetError):
        is_cds(c6, [])


def test_values():
    assert gamma_c(complete_graph(5)).gamma_c == 1
    assert gamma_c(cycle_graph(6)).gamma_c == 4
    assert gamma_c(gen_f(1, 2, 2).graph).gamma_c == 7
    assert gamma_c_bruteforce(path_graph(5)).witness == (1, 2, 3)
    assert gamma_c_bruteforce(star_graph(5)).gamma_c == 1


def test_adding_c6_chord_drops_gamma_c():
    c6 = cycle_graph(6)
    assert gamma_c_bruteforce(c6).gamma_c == 4
    # the long chord makes {0, 3} dominating: k - 2, not k - 1
    assert gamma_c_bruteforce(add_edge(c6, 0, 3)).witness == (0, 3)
    assert gamma_c(add_edge(c6, 0, 3)).gamma_c == 2
    assert gamma_c(add_edge(c6, 0, 2)).gamma_c == 3


def test_single_vertex_convention():
    res = gamma_c(Graph(1, (0,)))
    assert (res.gamma_c, res.witness) == (1, (0,))
    assert gamma_c_bruteforce(Graph(1, (0,))).gamma_c == 1


def test_witness_is_lexicographically_least():
    res = gamma_c(cycle_graph(6), enumerate_all=True)
    assert res.witness == (0, 1, 2, 3)
    assert res.all_min_sets[0] == res.witness
    assert len(res.all_min_sets) == 6


def test_errors():
    with pytest.raises(DisconnectedGraphError):
        gamma_c(disjoint_union(path_graph(2), path_graph(2)))
    with pytest.raises(CapExceededError):
        gamma_c_bruteforce(path_graph(21))


def test_json():
    assert gamma_c(cycle_graph(6)).to_json(6) == {"n": 6, "gamma_c": 4, "witness": [0, 1, 2, 3]}


@settings(max_examples=150)
@given(graphs(max_n=9, connected=True))
def test_agrees_with_brute_force(g):
    fast = gamma_c(g, enumerate_all=True)
    slow = gamma_c_bruteforce(g, enumerate_all=True)
    assert fast.gamma_c == slow.gamma_c
    assert fast.witness == slow.witness
    assert fast.all_min_sets == slow.all_min_sets
    assert all(is_cds(g, s) for s in fast.all_min_sets)


@given(graphs(max_n=8, connected=True))
def test_no_smaller_set_exists(g):
    k = gamma_c_value(g)
    if k > 1:
        for combo in combinations(range(g.n), k - 1):
            assert not is_cds(g, combo)


def test_monotone_under_edge_addition():
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 10), rng.uniform(0.2, 0.5))
        k = gamma_c_value(g)
        for u, v in g.non_edges():
            assert gamma_c_value(add_edge(g, u, v)) <= k


def test_iter_cds_lists_each_set_once():
    g = cycle_graph(7)
    sets = list(iter_cds(g, 5))
    assert len(sets) == len(set(sets)) == 7
    assert all(s.bit_count() == 5 for s in sets)


def test_has_cds_of_size_is_monotone():
    g = path_graph(6)
    assert [has_cds_of_size(g, s) for s in range(0, 7)] == [False, False, False, False, True, True, True]


def test_min_cds_family_counts_match_brute_force_to_ten():
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng, rng.randint(6, 10), rng.uniform(0.2, 0.45))
        k, fam = min_cds_family(g)
        slow = gamma_c_bruteforce(g, enumerate_all=True)
        assert k == slow.gamma_c
        assert sorted(tuple(members(s)) for s in fam) == list(slow.all_min_sets)
