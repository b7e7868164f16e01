from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdcrit.errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeExistsError,
    EmptyVertexSetError,
    JoinError,
    SelfLoopError,
    VertexRangeError,
)
from cdcrit.graph import (
    Graph,
    JoinExpr,
    add_edge,
    bfs_distances,
    build,
    complement,
    complete_graph,
    components,
    cycle_graph,
    diameter,
    distance,
    disjoint_union,
    empty_graph,
    induced,
    is_connected,
    join,
    mask_of,
    members,
    path_graph,
    relabel,
    remove_edge,
    star_graph,
)

from conftest import graphs


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


def test_build_k2():
    g = build(2, [(0, 1)])
    assert g.degrees() == [1, 1]
    assert g.m == 1


def test_build_c4():
    g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g == cycle_graph(4)
    assert all(d == 2 for d in g.degrees())


@pytest.mark.parametrize(
    "edges, exc",
    [([(0, 0)], SelfLoopError), ([(0, 3)], VertexRangeError), ([(0, 1), (1, 0)], DuplicateEdgeError)],
)
def test_build_rejects_bad_edges_with_distinct_errors(edges, exc):
    with pytest.raises(exc):
        build(3, edges)


def test_labels_do_not_affect_equality():
    a = build(2, [(0, 1)], ["x", "y"])
    assert a == build(2, [(0, 1)])
    assert hash(a) == hash(build(2, [(0, 1)]))
    assert a.find("y") == 1


def test_add_edge_value_semantics():
    p3 = path_graph(3)
    k3 = add_edge(p3, 0, 2)
    assert k3 == complete_graph(3)
    assert not p3.has_edge(0, 2)


def test_add_edge_to_c4_gives_k4_minus_edge():
    g = add_edge(cycle_graph(4), 0, 2)
    assert g.m == 5
    assert complement(g).edges() == [(1, 3)]


def test_add_edge_errors():
    with pytest.raises(EdgeExistsError):
        add_edge(path_graph(3), 0, 1)
    with pytest.raises(SelfLoopError):
        add_edge(path_graph(3), 1, 1)


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    c = complement(cycle_graph(4))
    assert sorted(c.edges()) == [(0, 2), (1, 3)]
    assert len(components(c)) == 2


def test_induced_examples():
    p3, index = induced(cycle_graph(6), [0, 1, 2])
    assert p3 == path_graph(3)
    assert index == {0: 0, 1: 1, 2: 2}
    k3, _ = induced(complete_graph(5), [1, 3, 4])
    assert k3 == complete_graph(3)
    with pytest.raises(EmptyVertexSetError):
        induced(cycle_graph(6), [])


def test_join_k1_k3():
    e = JoinExpr().vertex("a").add("K", complete_graph(3)).chain("a", "K")
    assert join(e) == complete_graph(4)


def test_join_restricted_and_edge():
    e = JoinExpr().vertex("x").add("G", path_graph(3)).restricted("x", "G", [0, 2])
    g = join(e)
    assert g.neighbors(0) == [1, 3]
    e2 = JoinExpr().add("A", complete_graph(2)).add("B", complete_graph(2)).edge("A", "B", 1, 0)
    assert edge_set(join(e2)) == {(0, 1), (2, 3), (1, 2)}


def test_join_errors():
    e = JoinExpr().vertex("a")
    with pytest.raises(JoinError):
        e.chain("a", "a")
    with pytest.raises(JoinError):
        e.chain("a", "missing")
    e.add("G", path_graph(2))
    with pytest.raises(JoinError):
        e.restricted("a", "G", [5])
    with pytest.raises(JoinError):
        e.add("a", path_graph(2))


def test_join_labels_follow_piece_names():
    e = JoinExpr().vertex("x_1").add("K", complete_graph(2, "k"))
    g = join(e.chain("x_1", "K"))
    assert g.labels == ("x_1", "k_1", "k_2")


def test_distances():
    c6 = cycle_graph(6)
    assert diameter(c6) == 3
    assert diameter(complete_graph(5)) == 1
    assert distance(c6, 0, 3) == 3
    g = disjoint_union(path_graph(2), path_graph(2))
    assert distance(g, 0, 3) is None
    with pytest.raises(DisconnectedGraphError):
        diameter(g)


def test_is_connected_edge_cases():
    assert is_connected(Graph(1, (0,)))
    assert not is_connected(empty_graph(2))
    assert not is_connected(empty_graph(0))


def test_star_and_members():
    s = star_graph(4)
    assert s.degree(0) == 4
    assert members(mask_of([3, 1, 4])) == [1, 3, 4]


@given(graphs(max_n=8))
def test_complement_of_added_edge(g):
    for u, v in g.non_edges():
        left = edge_set(complement(add_edge(g, u, v)))
        assert left == edge_set(complement(g)) - {(u, v)}


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(a, b):
    g = join(JoinExpr().add("A", a).add("B", b).chain("A", "B"))
    assert g.m == a.m + b.m + a.n * b.n


@given(graphs(max_n=9))
def test_induced_on_everything_is_identity(g):
    h, index = induced(g, range(g.n))
    assert h == g
    assert index == {v: v for v in range(g.n)}


@given(graphs(min_n=2, max_n=9, connected=True), st.randoms(use_true_random=False))
def test_distance_is_a_metric(g, r):
    d = [bfs_distances(g, v) for v in range(g.n)]
    for _ in range(20):
        a, b, c = (r.randrange(g.n) for _ in range(3))
        assert d[a][a] == 0
        assert d[a][b] == d[b][a]
        assert d[a][c] <= d[a][b] + d[b][c]


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, r):
    order = list(range(g.n))
    r.shuffle(order)
    h = relabel(g, order)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.m == g.m


def test_distances_match_networkx():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 10)
        edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        g = build(n, edges)
        ref = nx.Graph(edges)
        ref.add_nodes_from(range(n))
        assert is_connected(g) == nx.is_connected(ref)
        for v in range(n):
            mine = bfs_distances(g, v)
            theirs = nx.single_source_shortest_path_length(ref, v)
            assert {u: d for u, d in enumerate(mine) if d is not None} == theirs


def test_remove_edge_roundtrip():
    g = cycle_graph(5)
    assert add_edge(remove_edge(g, 0, 1), 0, 1) == g
