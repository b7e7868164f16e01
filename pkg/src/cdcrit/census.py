"""Exhaustive lists of small connected graphs, one per isomorphism class.

Level n is grown from level n - 1: every connected graph on n vertices has a
vertex whose removal leaves it connected, so adding one vertex with a
nonempty neighborhood to each graph of the previous level reaches every
class. Only extensions where the new vertex is the smallest non-cut vertex
under an isomorphism-invariant key are kept, then canonical certificates
remove the remaining duplicates. Results can be cached as graph6 files.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import limits
from .canon import canonical_form
from .errors import CapExceededError
from .graph import Graph, is_connected, is_connected_set, relabel
from .graph6 import decode, encode

INTERNAL_CAP = 9

# connected graphs on n unlabelled vertices, n = 0..9
KNOWN_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080)

_memory: dict[int, list[Graph]] = {}


def cache_dir() -> Path | None:
    raw = os.environ.get("CDCRIT_CACHE_DIR")
    if raw == "":
        return None
    if raw:
        return Path(raw)
    return Path.home() / ".cache" / "cdcrit"


def _key(adj: list[int], v: int) -> tuple:
    nb = adj[v]
    degs = []
    while nb:
        low = nb & -nb
        degs.append(adj[low.bit_length() - 1].bit_count())
        nb ^= low
    degs.sort()
    return (adj[v].bit_count(), tuple(degs))


def _extensions(g: Graph) -> Iterator[Graph]:
    n = g.n
    new = 1 << n
    full = (1 << (n + 1)) - 1
    base = list(g.adj) + [0]
    for nbhd in range(1, 1 << n):
        adj = list(base)
        adj[n] = nbhd
        m = nbhd
        while m:
            low = m & -m
            adj[low.bit_length() - 1] |= new
            m ^= low
        dv = nbhd.bit_count()
        kv = None
        ok = True
        for x in range(n):
            dx = adj[x].bit_count()
            if dx > dv:
                continue
            if dx == dv:
                if kv is None:
                    kv = _key(adj, n)
                kx = _key(adj, x)
                if kx >= kv:
                    continue
            # x beats the new vertex on the key; reject when x is not a cut vertex
            if is_connected_set(adj, full & ~(1 << x)):
                ok = False
                break
        if ok:
            yield Graph(n + 1, tuple(adj))


def _generate(n: int) -> list[Graph]:
    if n == 1:
        return [Graph(1, (0,))]
    seen: dict[int, Graph] = {}
    for g in connected_graphs(n - 1):
        for h in _extensions(g):
            form = canonical_form(h)
            if form.certificate not in seen:
                seen[form.certificate] = relabel(h, form.order)
    out = list(seen.values())
    out.sort(key=encode)
    return out


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, canonical, graph6-sorted."""
    if n < 1:
        return []
    if n > limits.cap(INTERNAL_CAP):
        raise CapExceededError("internal census", n, limits.cap(INTERNAL_CAP))
    if n in _memory:
        return _memory[n]
    graphs = None
    d = cache_dir()
    path = d / f"connected_{n}.g6" if d else None
    if path is not None and path.exists():
        lines = path.read_text().split()
        if n >= len(KNOWN_COUNTS) or len(lines) == KNOWN_COUNTS[n]:
            graphs = [decode(s) for s in lines]
    if graphs is None:
        graphs = _generate(n)
        if path is not None:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(".tmp")
                tmp.write_text("".join(encode(g) + "\n" for g in graphs))
                tmp.replace(path)
            except OSError:
                pass
    _memory[n] = graphs
    return graphs


def census(
    max_n: int,
    predicate: Callable[[Graph], bool] | None = None,
    min_n: int = 1,
    source: Iterable[Graph] | None = None,
) -> Iterator[Graph]:
    """Connected graphs with min_n <= n <= max_n passing ``predicate``.

    With ``source`` the graphs come from an external stream instead of the
    internal enumeration (needed above the internal cap); disconnected
    graphs in the stream are skipped.
    """
    if source is not None:
        for g in source:
            if not min_n <= g.n <= max_n or not is_connected(g):
                continue
            if predicate is None or predicate(g):
                yield g
        return
    if max_n > limits.cap(INTERNAL_CAP):
        raise CapExceededError("internal census", max_n, limits.cap(INTERNAL_CAP))
    for n in range(max(min_n, 1), max_n + 1):
        for g in connected_graphs(n):
            if predicate is None or predicate(g):
                yield g
