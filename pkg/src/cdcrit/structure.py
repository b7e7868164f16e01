"""Membership tests for the property-defined classes and forbidden structures."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from . import limits
from .decomposition import decompose
from .domination import gamma_c_value, iter_cds
from .errors import EmptyVertexSetError, PreconditionError, VertexRangeError
from .graph import (
    Graph,
    add_edge,
    complement,
    components,
    diameter,
    is_connected,
    mask_of,
    members,
    remove_edge,
    require_connected,
)

BAD_SUBGRAPH_CAP = 14


@dataclass(frozen=True)
class StructureVerdict:
    holds: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


# -- bad subgraph -----------------------------------------------------------


def _half_witness(g: Graph, w: int) -> tuple[int, int] | None:
    """Split ``w`` into (X, X1) with X closed and X1 universal inside ``w``.

    X must be nonempty with N[x] inside w for x in X; X1 must be nonempty with
    every x1 in X1 adjacent to all other vertices of w. Returns the split with
    the smallest X1, or None. X1 must hold every non-closed vertex; when all of
    w is closed a single universal vertex is enough.
    """
    closed = 0
    universal = 0
    for v in members(w):
        nv = g.adj[v] | (1 << v)
        if nv & ~w == 0:
            closed |= 1 << v
        if w & ~nv == 0:
            universal |= 1 << v
    x1 = w & ~closed
    if x1 == 0:
        x1 = universal & -universal
    if x1 == 0 or x1 & ~universal or x1 == w:
        return None
    return w & ~x1, x1


def is_bad_subgraph(g: Graph, x: int, x1: int, y: int, y1: int) -> bool:
    """Check the four defining conditions on explicit disjoint nonempty sets."""
    sets = [x, x1, y, y1]
    if any(s == 0 for s in sets):
        return False
    if x & x1 or x & y or x & y1 or x1 & y or x1 & y1 or y & y1:
        return False
    for part, univ in ((x | x1, x1), (y | y1, y1)):
        for v in members(univ):
            if (part & ~(1 << v)) & ~g.adj[v]:
                return False
    for part, closed in ((x | x1, x), (y | y1, y)):
        for v in members(closed):
            if (g.adj[v] | (1 << v)) & ~part:
                return False
    return True


def find_bad_subgraph(g: Graph, cap: int | None = None) -> StructureVerdict:
    """Search disjoint X, X1, Y, Y1 forming a bad subgraph.

    Any witness shrinks to one built from two inclusion-minimal valid halves
    W = X u X1, so only those are paired. The first disjoint pair in numeric
    mask order is returned.
    """
    limits.enforce("find_bad_subgraph", g.n, cap if cap is not None else BAD_SUBGRAPH_CAP)
    valid = []
    for w in range(1, g.full + 1):
        if w.bit_count() >= 2 and _half_witness(g, w) is not None:
            valid.append(w)
    minimal = [w for w in valid if not any(v != w and v & w == v for v in valid)]
    for i, a in enumerate(minimal):
        for b in minimal[i + 1 :]:
            if a & b == 0:
                xa, xa1 = _half_witness(g, a)
                yb, yb1 = _half_witness(g, b)
                return StructureVerdict(
                    True, {"X": members(xa), "X1": members(xa1), "Y": members(yb), "Y1": members(yb1)}
                )
    return StructureVerdict(False)


def find_bad_subgraph_bruteforce(g: Graph) -> bool:
    """Independent oracle: try every assignment of vertices to X, X1, Y, Y1 or none."""
    n = g.n
    if n > 9:
        raise ValueError("brute-force bad subgraph search is for n <= 9")
    from itertools import product

    for labels in product(range(5), repeat=n):
        sets = [0, 0, 0, 0, 0]
        for v, lab in enumerate(labels):
            sets[lab] |= 1 << v
        if is_bad_subgraph(g, sets[1], sets[2], sets[3], sets[4]):
            return True
    return False


# -- the end-block class defined by domination properties -------------------


def _require_biconnected_head(b: Graph, head: int) -> None:
    if not 0 <= head < b.n:
        raise VertexRangeError(f"head {head} not a vertex of the block")
    if b.n < 3 or not is_connected(b) or decompose(b).cut_vertices:
        raise PreconditionError("block must be 2-connected on at least 3 vertices")


def is_b3_block(b: Graph, head: int) -> StructureVerdict:
    """Check an end block with head ``b`` against the three-vertex domination class.

    (0) every connected dominating set of B containing the head has at least
        four vertices (so the head plus two more never suffices);
    (1) gamma_c(B) = 3 and every non-head vertex lies in a minimum connected
        dominating set;
    (2) for every non-adjacent pair x, y of non-head vertices, B + xy has a
        connected dominating set of size 2 meeting {x, y} and N(head).

    Property (0) is what makes the path attachment force k; without it a
    5-cycle passes (1) and (2) yet the attached graph has smaller gamma_c.
    """
    _require_biconnected_head(b, head)
    hbit = 1 << head
    for d in iter_cds(b, 3):
        if d & hbit:
            return StructureVerdict(False, {"property": 0, "set": members(d)})
    for size in (1, 2):
        for d in iter_cds(b, size):
            return StructureVerdict(False, {"property": 1, "gamma_c": size, "set": members(d)})
    covered = 0
    for d in iter_cds(b, 3):
        covered |= d
    missing = b.full & ~hbit & ~covered
    if missing:
        return StructureVerdict(False, {"property": 1, "uncovered": members(missing)})
    a = b.adj[head]
    rest = b.full & ~hbit
    for x, y in combinations(members(rest), 2):
        if b.has_edge(x, y):
            continue
        bxy = add_edge(b, x, y)
        pair = (1 << x) | (1 << y)
        ok = any(d & pair and d & a for d in iter_cds(bxy, 2))
        if not ok:
            return StructureVerdict(False, {"property": 2, "pair": [x, y]})
    return StructureVerdict(True, {"head": head, "A": members(a)})


# -- marked maximal clique class --------------------------------------------


def is_clique(g: Graph, s: int) -> bool:
    return all((s & ~(1 << v)) & ~g.adj[v] == 0 for v in members(s))


def is_maximal_clique(g: Graph, s: int) -> bool:
    if not is_clique(g, s):
        return False
    common = g.full & ~s
    for v in members(s):
        common &= g.adj[v]
    return common == 0


def is_pk_member(g: Graph, h: Iterable[int] | int, require_critical: bool = True) -> StructureVerdict:
    """Marked-clique class test for a gamma_c-critical graph and clique ``h``.

    (i) every vertex lies in a minimum connected dominating set that meets H;
    (ii) for every non-edge xy some connected dominating set of G + xy with
         fewer than k vertices meets H (it need not be minimum).
    """
    from .criticality import is_k_critical

    require_connected(g, "marked clique check")
    hm = mask_of(h)
    if hm == 0:
        raise EmptyVertexSetError("H must be nonempty")
    if hm.bit_count() < 2 or not is_maximal_clique(g, hm):
        raise PreconditionError("H must induce a maximal complete subgraph of order >= 2")
    k = gamma_c_value(g)
    if require_critical and not is_k_critical(g, k):
        return StructureVerdict(False, {"property": "critical", "k": k})
    covered = 0
    for d in iter_cds(g, k):
        if d & hm:
            covered |= d
    if covered != g.full:
        return StructureVerdict(False, {"property": "i", "uncovered": members(g.full & ~covered), "k": k})
    for x, y in g.non_edges():
        gxy = add_edge(g, x, y)
        # supersets of a CDS that meets H stay valid, so size k - 1 is enough
        if not any(d & hm for d in iter_cds(gxy, k - 1)):
            return StructureVerdict(False, {"property": "ii", "pair": [x, y], "k": k})
    return StructureVerdict(True, {"k": k, "H": members(hm)})


# -- small structural predicates ---------------------------------------------


def is_claw_free(g: Graph) -> StructureVerdict:
    for c in range(g.n):
        nb = members(g.adj[c])
        for a, b, d in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return StructureVerdict(False, {"center": c, "leaves": [a, b, d]})
    return StructureVerdict(True)


def is_diameter_critical(g: Graph, k: int) -> StructureVerdict:
    """diam(G) = k and deleting any edge raises it (disconnecting counts as raising)."""
    if not is_connected(g):
        return StructureVerdict(False, {"reason": "disconnected"})
    d = diameter(g)
    if d != k:
        return StructureVerdict(False, {"reason": "diameter", "diameter": d})
    for u, v in g.edges():
        h = remove_edge(g, u, v)
        if is_connected(h) and diameter(h) <= k:
            return StructureVerdict(False, {"reason": "edge", "edge": [u, v]})
    return StructureVerdict(True)


def is_star(g: Graph, comp: int) -> bool:
    """Whether the component ``comp`` induces K_{1,m} with m >= 1."""
    size = comp.bit_count()
    if size < 2:
        return False
    edges = sum((g.adj[v] & comp).bit_count() for v in members(comp)) // 2
    if edges != size - 1:
        return False
    return any((g.adj[v] & comp).bit_count() == size - 1 for v in members(comp))


def is_two_crit_complement_of_stars(g: Graph) -> StructureVerdict:
    """Complement is a disjoint union of at least two stars K_{1,m}, m >= 1."""
    comp = complement(g)
    parts = components(comp)
    if len(parts) < 2:
        return StructureVerdict(False, {"components": len(parts)})
    for p in parts:
        if not is_star(comp, p):
            return StructureVerdict(False, {"component": members(p)})
    return StructureVerdict(True, {"stars": [members(p) for p in parts]})
