"""Maximum matchings (Edmonds' blossom search) and l-factor-criticality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import limits
from .decomposition import odd_components
from .errors import ParameterError, ParityError, PreconditionError
from .graph import Graph, induced, members

FAVARON_CAP = 18


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: tuple[tuple[int, int], ...]
    is_perfect: bool


def _augmenting_search(nbrs: list[list[int]], match: list[int], root: int) -> int:
    n = len(nbrs)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # augment along the alternating path ending at ``to``
                    w = to
                    while w != -1:
                        pw = parent[w]
                        nxt = match[pw]
                        match[w] = pw
                        match[pw] = w
                        w = nxt
                    return to
                used[match[to]] = True
                queue.append(match[to])
    return -1


def max_matching(g: Graph) -> MatchingResult:
    nbrs = [members(a) for a in g.adj]
    match = [-1] * g.n
    for v in range(g.n):  # greedy start
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break
    for v in range(g.n):
        if match[v] == -1:
            _augmenting_search(nbrs, match, v)
    edges = tuple((v, match[v]) for v in range(g.n) if match[v] > v)
    return MatchingResult(len(edges), edges, 2 * len(edges) == g.n)


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    if g.n == 0:
        return True
    return max_matching(g).is_perfect


def max_matching_bruteforce(g: Graph) -> int:
    """Independent oracle: memoized recursion over the set of unmatched vertices."""

    @lru_cache(maxsize=None)
    def best(rest: int) -> int:
        if rest == 0:
            return 0
        low = rest & -rest
        v = low.bit_length() - 1
        rest2 = rest ^ low
        out = best(rest2)
        nb = g.adj[v] & rest2
        while nb:
            lb = nb & -nb
            nb ^= lb
            out = max(out, 1 + best(rest2 ^ lb))
        return out

    return best(g.full)


@dataclass(frozen=True)
class FactorCriticalityVerdict:
    ell: int
    holds: bool
    counterexample_set: tuple[int, ...] | None = None
    favaron_witness: tuple[int, ...] | None = None
    odd_components: int | None = None

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "holds": self.holds,
            "counterexample_set": list(self.counterexample_set) if self.counterexample_set is not None else None,
            "favaron_witness": list(self.favaron_witness) if self.favaron_witness is not None else None,
            "odd_components": self.odd_components,
        }


def _check_ell(ell: int) -> None:
    if ell not in (0, 1, 2):
        raise ParameterError(f"ell={ell} unsupported (0, 1 or 2)")


def _remove_has_pm(g: Graph, s: tuple[int, ...]) -> bool:
    keep = g.full
    for v in s:
        keep &= ~(1 << v)
    if keep == 0:
        return True
    h, _ = induced(g, keep)
    return has_perfect_matching(h)


def is_factor_critical(g: Graph, ell: int) -> FactorCriticalityVerdict:
    """Direct test: G - S has a perfect matching for every S of size ``ell``."""
    _check_ell(ell)
    if g.n % 2 != ell % 2:
        raise ParityError(f"n={g.n} and ell={ell} differ in parity")
    if g.n < ell:
        raise ParameterError("fewer vertices than ell")
    for s in combinations(range(g.n), ell):
        if not _remove_has_pm(g, s):
            return FactorCriticalityVerdict(ell, False, counterexample_set=s)
    return FactorCriticalityVerdict(ell, True)


def favaron_violation(g: Graph, s: int, ell: int) -> int | None:
    """omega_o(G - S) when it exceeds |S| - ell, else None."""
    odd = odd_components(g, s)
    return odd if odd > s.bit_count() - ell else None


def favaron_check(g: Graph, ell: int) -> FactorCriticalityVerdict:
    """Odd-component condition over every S with |S| >= ell.

    Requires minimum degree at least ell + 1. Sets are scanned by size, then
    lexicographically, and the first violation is reported.
    """
    _check_ell(ell)
    if g.min_degree() < ell + 1:
        raise PreconditionError(f"minimum degree {g.min_degree()} < ell + 1 = {ell + 1}")
    limits.enforce("favaron_check", g.n, FAVARON_CAP)
    for size in range(ell, g.n + 1):
        for combo in combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            odd = favaron_violation(g, m, ell)
            if odd is not None:
                return FactorCriticalityVerdict(ell, False, favaron_witness=combo, odd_components=odd)
    return FactorCriticalityVerdict(ell, True)
