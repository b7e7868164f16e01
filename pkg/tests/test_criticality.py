from __future__ import annotations

import pytest

from cdcrit.criticality import (
    check_critical,
    critical_k,
    is_k_critical,
    verify_block_lemmas,
    verify_lemma1,
    verify_lemma2,
)
from cdcrit.domination import is_cds
from cdcrit.errors import DisconnectedGraphError, PreconditionError, ReportMismatchError
from cdcrit.families import gen_g1, gen_g2, gen_x
from cdcrit.graph import add_edge, build, complement, complete_graph, cycle_graph, disjoint_union, path_graph, star_graph
from cdcrit.suites import corpus_specs
from cdcrit.families import generate


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_cycles_are_critical(k):
    report = check_critical(cycle_graph(k + 2))
    assert report.k == k and report.is_critical and report.failing_pair is None


def test_x3_is_4_critical():
    assert is_k_critical(gen_x(3).graph, 4)


def test_c4_with_pendant_is_not_critical():
    g = build(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    report = check_critical(g)
    assert not report.is_critical
    assert report.failing_pair is not None
    assert not is_k_critical(g)
    assert critical_k(g) is None


def test_complete_graphs_vacuously_critical():
    report = check_critical(complete_graph(4))
    assert report.k == 1 and report.is_critical and report.records == ()


def test_report_records_have_valid_witnesses():
    g = cycle_graph(7)
    report = check_critical(g)
    for r in report.records:
        assert len(r.witness) == r.gamma_c
        assert is_cds(add_edge(g, r.u, r.v), r.witness)
    assert [(r.u, r.v) for r in report.records] == g.non_edges()


def test_k_mismatch():
    assert not is_k_critical(cycle_graph(6), 3)


def test_disconnected():
    with pytest.raises(DisconnectedGraphError):
        check_critical(disjoint_union(path_graph(2), path_graph(2)))


def test_lemma1_on_c6():
    g = cycle_graph(6)
    res = verify_lemma1(g, check_critical(g))
    assert res.holds and res.checked > 0
    assert {r.gamma_c for r in check_critical(g).records} == {2, 3}


def test_lemma1_on_two_critical_complement_of_stars():
    stars = disjoint_union(star_graph(1), star_graph(2))
    g = complement(stars)
    report = check_critical(g)
    assert report.k == 2 and report.is_critical
    assert {r.gamma_c for r in report.records} == {1}
    assert verify_lemma1(g, report)


def test_lemma1_vacuous_on_complete():
    g = complete_graph(5)
    assert verify_lemma1(g, check_critical(g))


def test_block_lemmas_on_generated_instances():
    for inst in (gen_g1(5, 1, 2), gen_g2(5)):
        g = inst.graph
        report = check_critical(g)
        res = verify_block_lemmas(g, report)
        assert res.holds, res.detail
        assert res.checked > 0
        assert verify_lemma2(g, report)


def test_block_lemmas_vacuous_without_cut_vertex():
    g = cycle_graph(6)
    assert verify_block_lemmas(g, check_critical(g)).checked == 0


def test_stale_report_rejected():
    report = check_critical(cycle_graph(6))
    with pytest.raises(ReportMismatchError):
        verify_lemma1(cycle_graph(7), report)


def test_non_critical_report_rejected():
    g = path_graph(4)
    with pytest.raises(PreconditionError):
        verify_block_lemmas(g, check_critical(g))


def test_corpus_witness_sizes_in_window():
    for spec in corpus_specs():
        g = generate(spec).graph
        report = check_critical(g)
        if not report.is_critical or report.k < 2:
            continue
        assert {r.gamma_c for r in report.records} <= {report.k - 2, report.k - 1}, spec


def test_json_shape():
    out = check_critical(cycle_graph(5)).to_json()
    assert out["k"] == 3 and out["is_critical"] is True
    assert out["non_edges"][0] == {"u": 0, "v": 2, "gamma_c": 2, "witness": [0, 2]}
