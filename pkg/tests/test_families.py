from __future__ import annotations

import pytest

from cdcrit.canon import orbits
from cdcrit.census import connected_graphs
from cdcrit.criticality import is_k_critical
from cdcrit.decomposition import decompose
from cdcrit.domination import gamma_c_value
from cdcrit.errors import ParameterError, ParityError, PreconditionError
from cdcrit.families import (
    FamilySpec,
    default_b3_block,
    extend_pk,
    gen_a,
    gen_b0,
    gen_b1,
    gen_b21,
    gen_b22,
    gen_cycle,
    gen_f,
    gen_fig4,
    gen_g1,
    gen_g2,
    gen_g5,
    gen_hl_block,
    gen_x,
    generate,
    realizability_params,
    realizability_targets,
)
from cdcrit.matching import is_factor_critical
from cdcrit.structure import is_b3_block, is_claw_free


def test_b22_minimal():
    inst = gen_b22((1, 1), 0)
    g = inst.graph
    assert g.n == 5
    c = inst.head
    assert g.label(c) == "c"
    assert sorted(g.label(v) for v in g.neighbors(c)) == ["s^1_1", "s^2_1"]
    s10, s11, s20, s21 = g.vertices_labeled("s^1_0", "s^1_1", "s^2_0", "s^2_1")
    assert not g.has_edge(s10, s11) and not g.has_edge(s20, s21)
    inner = [s10, s11, s20, s21]
    assert sum(g.has_edge(u, v) for i, u in enumerate(inner) for v in inner[i + 1 :]) == 4


def test_b0_is_k4():
    inst = gen_b0(3)
    assert inst.graph.n == 4 and inst.graph.m == 6
    assert inst.graph.label(inst.head) == "c"


def test_b1_and_b21_shapes():
    assert gen_b1(2).graph.n == 4
    b21 = gen_b21(2, 2).graph
    assert b21.n == 6
    # the claimed value is 3; a two-vertex connected dominating set exists
    assert gamma_c_value(b21) == 2


@pytest.mark.parametrize(
    "fn, args",
    [(gen_b0, (0,)), (gen_b1, (1,)), (gen_b21, (1, 2)), (gen_b22, ((1,), 0)), (gen_b22, ((0, 1), 0))],
)
def test_end_block_bounds(fn, args):
    with pytest.raises(ParameterError):
        fn(*args)


@pytest.mark.parametrize("k, l, n_l, zeta", [(5, 1, 2, 2), (6, 3, 2, 3), (4, 1, 2, 1)])
def test_g1(k, l, n_l, zeta):
    g = gen_g1(k, l, n_l).graph
    assert gamma_c_value(g) == k
    assert decompose(g).zeta == zeta
    assert is_k_critical(g, k)


def test_g1_single_vertex_clique_has_extra_cut_vertex():
    inst = gen_g1(4, 1, 1)
    assert inst.claims.zeta == 1
    assert decompose(inst.graph).zeta == 2
    assert is_k_critical(inst.graph, 4)


@pytest.mark.parametrize("k", [5, 6])
def test_g2(k):
    g = gen_g2(k).graph
    assert is_k_critical(g, k)
    assert decompose(g).zeta == k - 3


def test_g2_rejects_b0_block_and_small_k():
    b0 = gen_b0(3)
    with pytest.raises(PreconditionError):
        gen_g2(5, b0.graph, b0.head)
    with pytest.raises(ParameterError):
        gen_g2(4)
    assert is_k_critical(gen_g2(4, allow_k4=True).graph, 4)


def test_default_b3_block_is_minimal():
    found = {}
    for n in range(3, 7):
        for g in connected_graphs(n):
            if decompose(g).cut_vertices:
                continue
            for head in sorted(set(orbits(g))):
                if is_b3_block(g, head).holds:
                    found.setdefault(n, []).append(g)
    assert sorted(found) == [6]
    b, head = default_b3_block()
    assert b.n == 6 and is_b3_block(b, head).holds


def test_hl_blocks():
    g = gen_hl_block(2, (2, 2)).graph
    assert g.n == 5
    u1 = g.vertices_labeled("u^1_1", "u^1_2")
    u2 = g.vertices_labeled("u^2_1", "u^2_2")
    cross = [(a, b) for a in u1 for b in u2 if g.has_edge(a, b)]
    assert len(cross) == 2 and len({a for a, _ in cross}) == 2 and len({b for _, b in cross}) == 2
    assert gen_hl_block(3, (2, 2, 2)).graph.n == 7
    with pytest.raises(ParameterError):
        gen_hl_block(2, (1, 2))


def test_f_examples():
    g = gen_f(1, 2, 2).graph
    d = decompose(g)
    assert (gamma_c_value(g), d.zeta, d.zeta0) == (7, 3, 3)
    g = gen_f(0, 2, 2).graph
    assert (gamma_c_value(g), decompose(g).zeta) == (4, 2)
    with pytest.raises(ParameterError):
        gen_f(0, 1, 2)


def test_realizability_map():
    assert realizability_params(7, 3, 3) == (1, 2, 2)
    targets = realizability_targets()
    assert len(targets) == 22
    assert all(4 <= k <= 8 for k, _, _ in targets)


def test_x():
    inst = gen_x(3)
    g = inst.graph
    assert g.n == 9 and is_k_critical(g, 4)
    assert g.min_degree() == 2
    assert gen_x(5).graph.min_degree() == 4
    with pytest.raises(ParameterError):
        gen_x(2)


def test_g5():
    g = gen_g5(2, 2).graph
    assert g.n == 11 and gamma_c_value(g) == 5
    with pytest.raises(ParityError):
        gen_g5(2, 3)


def test_a_fig4_cycle():
    a = gen_a(3, 2).graph
    assert a.n == 8 and is_k_critical(a, 3) and is_claw_free(a).holds and a.min_degree() >= 3
    assert not is_factor_critical(a, 2).holds
    with pytest.raises(ParameterError):
        gen_a(2, 2)
    assert is_k_critical(gen_cycle(4).graph, 4) and gen_cycle(4).graph.n == 6


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_fig4_is_factor_critical(n):
    # the claimed failure does not occur for any tested order
    g = gen_fig4(n).graph
    assert g.n == 2 * n + 1 and is_k_critical(g, 3)
    assert is_factor_critical(g, 1).holds


def test_extensions():
    ext = extend_pk(gen_cycle(4), (2,))
    assert is_k_critical(ext.graph, 5)
    ext = extend_pk(gen_x(3), (2, 2, 1))
    assert is_k_critical(ext.graph, 7) and not is_factor_critical(ext.graph, 1).holds
    ext = extend_pk(gen_a(3, 2), (2, 3))
    g = ext.graph
    assert is_k_critical(g, 5) and is_claw_free(g).holds and not is_factor_critical(g, 2).holds
    assert g.min_degree() == 2
    with pytest.raises(PreconditionError):
        extend_pk(gen_b0(3).graph, (1,))


def test_spec_parse_roundtrip():
    for text in ["F:p=1,q=2,r=2", "EXT:base=X,s=3,sizes=2.2.1", "B22:m=1.2,r=0", "CYCLE:k=4"]:
        spec = FamilySpec.parse(text)
        assert str(spec) == text
        assert FamilySpec.parse(str(spec)) == spec
    assert FamilySpec.parse("EXT:base=X,s=3,sizes=2.2.1").as_dict()["sizes"] == (2, 2, 1)
    for bad in ["", "NOPE:k=1", "F:p", "F:p=x"]:
        with pytest.raises(ParameterError):
            FamilySpec.parse(bad)


def test_generate_dispatch():
    assert generate("CYCLE:k=3").graph.n == 5
    assert generate("EXT:base=CYCLE,k=4,sizes=2").graph.n == 9
    with pytest.raises(ParameterError):
        generate("G5:l1=2")
