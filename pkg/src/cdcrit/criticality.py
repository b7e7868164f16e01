"""k-gamma_c-criticality and the lemma-level checks on the sets D_xy."""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import decompose
from .domination import gamma_c, gamma_c_value, has_cds_of_size, iter_cds
from .errors import PreconditionError, ReportMismatchError
from .graph import Graph, add_edge, components, members, require_connected


@dataclass(frozen=True)
class NonEdgeRecord:
    u: int
    v: int
    gamma_c: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    is_critical: bool
    records: tuple[NonEdgeRecord, ...]
    failing_pair: tuple[int, int] | None
    graph_adj: tuple[int, ...] = field(repr=False, default=())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "is_critical": self.is_critical,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "non_edges": [
                {"u": r.u, "v": r.v, "gamma_c": r.gamma_c, "witness": list(r.witness)}
                for r in self.records
            ],
        }


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a lemma verifier; ``detail`` describes the first failure."""

    holds: bool
    detail: dict | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds


def check_critical(g: Graph) -> CriticalityReport:
    """Full report: gamma_c(G + uv) and its least witness for every non-edge."""
    require_connected(g, "criticality check")
    k = gamma_c_value(g)
    records = []
    failing = None
    for u, v in g.non_edges():
        res = gamma_c(add_edge(g, u, v))
        records.append(NonEdgeRecord(u, v, res.gamma_c, res.witness))
        if res.gamma_c >= k and failing is None:
            failing = (u, v)
    return CriticalityReport(k, failing is None, tuple(records), failing, g.adj)


def is_k_critical(g: Graph, k: int | None = None) -> bool:
    """Fast yes/no: gamma_c(G) = k (when given) and every added edge lowers it."""
    require_connected(g, "criticality check")
    value = gamma_c_value(g)
    if k is not None and value != k:
        return False
    for u, v in g.non_edges():
        if not has_cds_of_size(add_edge(g, u, v), value - 1):
            return False
    return True


def critical_k(g: Graph) -> int | None:
    """gamma_c(G) when G is gamma_c-critical, else None."""
    k = gamma_c_value(g)
    return k if is_k_critical(g, k) else None


def _require_report(g: Graph, report: CriticalityReport) -> None:
    if report.graph_adj and report.graph_adj != g.adj:
        raise ReportMismatchError("criticality report was computed for a different graph")
    if not report.is_critical:
        raise PreconditionError("graph is not gamma_c-critical")


def min_cds_sets(g: Graph) -> tuple[int, list[int]]:
    k = gamma_c_value(g)
    if g.n == 1:
        return 1, [1]
    return k, list(iter_cds(g, k))


def verify_lemma1(g: Graph, report: CriticalityReport) -> CheckResult:
    """Size window, endpoint hit and neighborhood avoidance for every minimum D_xy."""
    _require_report(g, report)
    k = report.k
    if k < 2:
        return CheckResult(True)
    checked = 0
    for u, v in g.non_edges():
        size, sets = min_cds_sets(add_edge(g, u, v))
        if not k - 2 <= size <= k - 1:
            return CheckResult(False, {"pair": [u, v], "size": size, "rule": "size"})
        for d in sets:
            checked += 1
            hit = d & ((1 << u) | (1 << v))
            if not hit:
                return CheckResult(False, {"pair": [u, v], "set": members(d), "rule": "endpoint"})
            for x, y in ((u, v), (v, u)):
                if hit == 1 << x and g.adj[y] & d:
                    return CheckResult(
                        False, {"pair": [u, v], "set": members(d), "rule": "neighborhood"}
                    )
    return CheckResult(True, checked=checked)


def verify_lemma2(g: Graph, report: CriticalityReport) -> CheckResult:
    """Two components after removing a cut vertex, clique attachments, cut vertex in every gamma_c-set."""
    _require_report(g, report)
    if report.k < 3:
        return CheckResult(True)
    dec = decompose(g)
    _, sets = min_cds_sets(g)
    for c in members(dec.cut_vertices):
        comps = components(g, g.full & ~(1 << c))
        if len(comps) != 2:
            return CheckResult(False, {"cut_vertex": c, "components": len(comps), "rule": "two"})
        for comp in comps:
            nb = g.adj[c] & comp
            for x in members(nb):
                if (nb & ~(1 << x)) & ~g.adj[x]:
                    return CheckResult(False, {"cut_vertex": c, "rule": "clique"})
        if len(dec.blocks_containing(c)) != 2:
            return CheckResult(False, {"cut_vertex": c, "rule": "two_blocks"})
        for d in sets:
            if not d >> c & 1:
                return CheckResult(False, {"cut_vertex": c, "set": members(d), "rule": "in_every_set"})
    return CheckResult(True, checked=len(sets))


def verify_block_lemmas(g: Graph, report: CriticalityReport) -> CheckResult:
    """Cut-vertex agreement and strict block shrinkage between D and D_xy.

    For each block B and non-edge xy inside B, compares every minimum CDS D of
    G with every minimum CDS D_xy of G + xy.
    """
    _require_report(g, report)
    dec = decompose(g)
    cut = dec.cut_vertices
    if cut == 0:
        return CheckResult(True)
    lemma2 = verify_lemma2(g, report)
    if not lemma2:
        return lemma2
    _, base_sets = min_cds_sets(g)
    checked = 0
    for bi, block in enumerate(dec.blocks):
        for u, v in g.non_edges():
            if not (block >> u & 1 and block >> v & 1):
                continue
            _, xy_sets = min_cds_sets(add_edge(g, u, v))
            for d in base_sets:
                for dxy in xy_sets:
                    checked += 1
                    info = {"block": members(block), "pair": [u, v], "D": members(d), "D_xy": members(dxy)}
                    if d & cut != dxy & cut:
                        return CheckResult(False, info | {"rule": "cut_agreement"})
                    if (dxy & block).bit_count() >= (d & block).bit_count():
                        return CheckResult(False, info | {"rule": "block_shrinks"})
                    if (dxy & block & ~cut).bit_count() >= (d & block & ~cut).bit_count():
                        return CheckResult(False, info | {"rule": "noncut_shrinks"})
    return CheckResult(True, checked=checked)
