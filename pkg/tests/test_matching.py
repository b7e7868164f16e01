from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from cdcrit.decomposition import odd_components
from cdcrit.errors import CapExceededError, ParameterError, ParityError, PreconditionError
from cdcrit.families import gen_a, gen_g5, gen_x
from cdcrit.graph import build, complete_graph, cycle_graph, empty_graph, induced, mask_of, path_graph
from cdcrit.matching import (
    favaron_check,
    favaron_violation,
    has_perfect_matching,
    is_factor_critical,
    max_matching,
    max_matching_bruteforce,
)

from conftest import graphs, random_graph


def _nx(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    return h


def test_matching_agrees_with_bruteforce_and_networkx():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.uniform(0.1, 0.8), connected=False)
        res = max_matching(g)
        seen = set()
        for u, v in res.edges:
            assert g.has_edge(u, v)
            assert u not in seen and v not in seen
            seen |= {u, v}
        assert res.size == max_matching_bruteforce(g)
        assert res.size == len(nx.max_weight_matching(_nx(g), maxcardinality=True))


@given(graphs(max_n=10, connected=False))
def test_matching_size_property(g):
    assert max_matching(g).size == max_matching_bruteforce(g)


def test_small_examples():
    assert max_matching(cycle_graph(5)).size == 2
    assert has_perfect_matching(cycle_graph(6))
    assert not has_perfect_matching(path_graph(3))
    assert has_perfect_matching(empty_graph(0))
    assert not has_perfect_matching(build(4, [(0, 1), (0, 2), (0, 3)]))


def test_c5_is_factor_critical():
    assert is_factor_critical(cycle_graph(5), 1).holds


def test_a32_fails_two_factor_criticality():
    inst = gen_a(3, 2)
    g = inst.graph
    verdict = is_factor_critical(g, 2)
    assert not verdict.holds
    s = mask_of(inst.vertices("x_1", "x_2"))
    assert favaron_violation(g, s, 2) == 2


def test_k4_favaron():
    assert favaron_check(complete_graph(4), 0).holds
    assert favaron_check(complete_graph(5), 1).holds
    assert favaron_check(complete_graph(6), 2).holds


@pytest.mark.parametrize("s", [3, 5])
def test_x_witness(s):
    inst = gen_x(s)
    g = inst.graph
    assert not is_factor_critical(g, 1).holds
    witness = mask_of(inst.vertices(*[f"a_{i}" for i in range(1, s + 1)]))
    assert odd_components(g, witness) == s + 1


def test_g5_witness():
    inst = gen_g5(2, 2)
    g = inst.graph
    assert not is_factor_critical(g, 1).holds
    assert odd_components(g, mask_of(inst.vertices("x'", "y'", "z"))) == 4


def test_favaron_reports_first_violation():
    g = gen_x(5).graph
    verdict = favaron_check(g, 1)
    assert not verdict.holds
    s = mask_of(verdict.favaron_witness)
    assert verdict.odd_components == odd_components(g, s) > s.bit_count() - 1


def test_errors():
    with pytest.raises(ParityError):
        is_factor_critical(cycle_graph(6), 1)
    with pytest.raises(ParameterError):
        is_factor_critical(cycle_graph(5), 3)
    with pytest.raises(PreconditionError):
        favaron_check(path_graph(5), 1)
    with pytest.raises(CapExceededError):
        favaron_check(complete_graph(19), 1)


def _direct(g, ell):
    for s in combinations(range(g.n), ell):
        keep = g.full & ~mask_of(s)
        if keep and 2 * max_matching_bruteforce(induced(g, keep)[0]) != keep.bit_count():
            return False
    return True


@given(graphs(min_n=2, max_n=8))
def test_direct_test_matches_bruteforce(g):
    for ell in (0, 1, 2):
        if g.n % 2 == ell % 2 and g.n >= ell:
            assert is_factor_critical(g, ell).holds == _direct(g, ell)


@given(graphs(min_n=2, max_n=9))
def test_favaron_equivalence(g):
    for ell in (0, 1, 2):
        if g.n % 2 == ell % 2 and g.min_degree() >= ell + 1:
            assert favaron_check(g, ell).holds == is_factor_critical(g, ell).holds


@given(graphs(max_n=10, connected=False))
def test_zero_factor_critical_is_perfect_matching(g):
    if g.n % 2 == 0:
        assert is_factor_critical(g, 0).holds == has_perfect_matching(g)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("CDCRIT_MAX_N", "19")
    assert favaron_check(complete_graph(19), 1).holds
    monkeypatch.setenv("CDCRIT_MAX_N", "4")
    with pytest.raises(CapExceededError):
        favaron_check(complete_graph(5), 1)
