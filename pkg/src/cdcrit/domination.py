"""Exact minimum connected dominating sets.

The solver deepens the target size s = 1, 2, ... and, for each size, grows
connected vertex sets from a fixed root using only neighbors of the current
set that are larger than the root (each connected set is visited exactly
once). A branch is cut when the undominated vertices cannot be covered by the
remaining additions: a vertex added to a connected set already touches it, so
it newly dominates at most ``deg - 1`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import CapExceededError, EmptyVertexSetError, VertexRangeError
from .graph import Graph, is_connected_set, mask_of, members, require_connected

BRUTEFORCE_CAP = 20


def closed_nbhd_of_set(adj: tuple[int, ...], s: int) -> int:
    cov = s
    while s:
        low = s & -s
        cov |= adj[low.bit_length() - 1]
        s ^= low
    return cov


def is_dominating(g: Graph, d: Iterable[int] | int) -> bool:
    return closed_nbhd_of_set(g.adj, mask_of(d)) == g.full


def is_cds(g: Graph, d: Iterable[int] | int) -> bool:
    """True iff ``d`` dominates ``g`` and induces a connected subgraph."""
    s = mask_of(d)
    if s == 0:
        raise EmptyVertexSetError("a connected dominating set must be nonempty")
    if s & ~g.full:
        raise VertexRangeError("vertex set outside the graph")
    return closed_nbhd_of_set(g.adj, s) == g.full and is_connected_set(g.adj, s)


@dataclass(frozen=True)
class GammaCResult:
    gamma_c: int
    witness: tuple[int, ...]
    all_min_sets: tuple[tuple[int, ...], ...] | None = field(default=None)

    def to_json(self, n: int | None = None) -> dict:
        out: dict = {}
        if n is not None:
            out["n"] = n
        out["gamma_c"] = self.gamma_c
        out["witness"] = list(self.witness)
        if self.all_min_sets is not None:
            out["all_min_sets"] = [list(s) for s in self.all_min_sets]
        return out


def connected_sets_with_root(
    adj: tuple[int, ...], full: int, root: int, size: int, max_gain: int
) -> Iterator[int]:
    """Connected dominating sets of exactly ``size`` whose smallest vertex is ``root``.

    ``max_gain`` bounds how many new vertices one addition can dominate.
    """
    above = full & ~((1 << (root + 1)) - 1)
    start = 1 << root
    cov0 = adj[root] | start

    def grow(sub: int, cov: int, ext: int, left: int) -> Iterator[int]:
        if left == 0:
            if cov == full:
                yield sub
            return
        if (full & ~cov).bit_count() > left * max_gain:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            new_ext = ext | (adj[w] & ~cov & above)
            yield from grow(sub | low, cov | adj[w], new_ext, left - 1)

    yield from grow(start, cov0, adj[root] & above, size - 1)


def _max_gain_above(g: Graph, root: int) -> int:
    degs = [g.adj[v].bit_count() for v in range(root + 1, g.n)]
    return max(max(degs, default=0) - 1, 0)


def iter_cds(g: Graph, size: int) -> Iterator[int]:
    """All connected dominating sets of exactly ``size`` vertices (bitsets).

    Sets come grouped by smallest vertex, ascending.
    """
    full = g.full
    for root in range(g.n):
        if g.n - root < size:
            return
        yield from connected_sets_with_root(g.adj, full, root, size, _max_gain_above(g, root))


def find_cds(g: Graph, size: int, accept: Callable[[int], bool] | None = None) -> int | None:
    """First connected dominating set of exactly ``size`` vertices passing ``accept``."""
    for s in iter_cds(g, size):
        if accept is None or accept(s):
            return s
    return None


def has_cds_of_size(g: Graph, size: int) -> bool:
    """Whether some connected dominating set has at most ``size`` vertices.

    Supersets of a connected dominating set obtained by adding neighbors stay
    connected and dominating, so testing exactly ``size`` suffices for a
    connected graph with n >= size.
    """
    if size <= 0:
        return False
    if size >= g.n:
        return g.n >= 1
    return find_cds(g, size) is not None


def gamma_c_value(g: Graph) -> int:
    require_connected(g, "connected domination")
    if g.n == 1:
        return 1
    s = 1
    while not has_cds_of_size(g, s):
        s += 1
    return s


def _sorted_sets(masks: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(members(m)) for m in masks))


def gamma_c(g: Graph, enumerate_all: bool = False) -> GammaCResult:
    """Exact connected domination number with the lexicographically least witness.

    A single vertex graph reports gamma_c = 1 with witness (0,).
    """
    require_connected(g, "connected domination")
    if g.n == 1:
        return GammaCResult(1, (0,), ((0,),) if enumerate_all else None)
    size = 1
    while True:
        if enumerate_all:
            found = list(iter_cds(g, size))
            if found:
                sets = _sorted_sets(found)
                return GammaCResult(size, sets[0], sets)
        else:
            for root in range(g.n - size + 1):
                found = list(
                    connected_sets_with_root(g.adj, g.full, root, size, _max_gain_above(g, root))
                )
                if found:
                    return GammaCResult(size, min(tuple(members(m)) for m in found))
        size += 1


def min_cds_family(g: Graph) -> tuple[int, list[int]]:
    """gamma_c and every minimum connected dominating set as bitsets."""
    k = gamma_c_value(g)
    if g.n == 1:
        return 1, [1]
    return k, list(iter_cds(g, k))


def gamma_c_bruteforce(g: Graph, enumerate_all: bool = False) -> GammaCResult:
    """Independent oracle: scan vertex subsets by size in lexicographic order."""
    require_connected(g, "connected domination")
    if g.n > BRUTEFORCE_CAP:
        raise CapExceededError("gamma_c_bruteforce", g.n, BRUTEFORCE_CAP)
    full = g.full
    for size in range(1, g.n + 1):
        hits = []
        for combo in combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            cov = m
            for v in combo:
                cov |= g.adj[v]
            if cov == full and is_connected_set(g.adj, m):
                if not enumerate_all:
                    return GammaCResult(size, combo)
                hits.append(combo)
        if hits:
            return GammaCResult(size, hits[0], tuple(hits))
    raise AssertionError("unreachable: V(G) is a connected dominating set")
