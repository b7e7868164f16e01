"""Canonical labelling by individualization and equitable refinement.

The search tree is the usual one: refine the ordered partition to an
equitable one, pick the first smallest non-singleton cell, individualize each
of its vertices in turn. Every leaf gives a relabelled adjacency matrix and the
canonical form is the largest one. Automorphisms discovered at leaves prune
the tree (orbit pruning plus a jump back to the divergence point when a leaf
matches the first leaf). Exact, intended for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, relabel


def _refine(adj: tuple[int, ...], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    cells = list(cells)
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            frags = [groups[c] for c in sorted(groups)]
            cells[i : i + 1] = frags
            for f in frags:
                m = 0
                for v in f:
                    m |= 1 << v
                queue.append(m)
            i += len(frags)
    return cells


def _initial(g: Graph, colors: list[int] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(g.n))]
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def _certificate(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    cert = 0
    for v in order:
        row = 0
        a = adj[v]
        while a:
            low = a & -a
            row |= 1 << (n - 1 - pos[low.bit_length() - 1])
            a ^= low
        cert = (cert << n) | row
    return cert


class _Search:
    def __init__(self, g: Graph) -> None:
        self.adj = g.adj
        self.n = g.n
        self.best_cert: int | None = None
        self.best_order: list[int] | None = None
        self.first_cert: int | None = None
        self.first_order: list[int] | None = None
        self.first_path: list[int] | None = None
        self.generators: list[list[int]] = []

    def _record_auto(self, a_order: list[int], b_order: list[int]) -> None:
        perm = list(range(self.n))
        for u, v in zip(a_order, b_order):
            perm[u] = v
        if any(perm[i] != i for i in range(self.n)):
            self.generators.append(perm)

    def leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        order = [c[0] for c in cells]
        cert = _certificate(self.adj, order)
        if self.first_cert is None:
            self.first_cert, self.first_order, self.first_path = cert, order, list(path)
            self.best_cert, self.best_order = cert, order
            return None
        if cert == self.first_cert:
            self._record_auto(self.first_order, order)
            depth = 0
            for a, b in zip(path, self.first_path):
                if a != b:
                    break
                depth += 1
            return depth
        if cert == self.best_cert:
            self._record_auto(self.best_order, order)
        elif cert > self.best_cert:
            self.best_cert, self.best_order = cert, order
        return None

    def _orbit_root(self, path: list[int]):
        fixed = set(path)
        gens = [p for p in self.generators if all(p[v] == v for v in fixed)]
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in gens:
            for i, j in enumerate(p):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        return find

    def node(self, cells: list[list[int]], path: list[int]) -> int | None:
        if len(cells) == self.n:
            return self.leaf(cells, path)
        target, size = -1, self.n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
        cell = cells[target]
        tried: list[int] = []
        ngens = -1
        find = None
        for v in sorted(cell):
            if tried:
                if ngens != len(self.generators):
                    find = self._orbit_root(path)
                    ngens = len(self.generators)
                rv = find(v)
                if any(find(u) == rv for u in tried):
                    continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            child = _refine(self.adj, child, [1 << v])
            jump = self.node(child, path + [v])
            tried.append(v)
            if jump is not None and jump < len(path):
                return jump
        return None


@dataclass(frozen=True)
class CanonicalForm:
    certificate: int
    order: tuple[int, ...]  # canonical position i holds original vertex order[i]
    generators: tuple[tuple[int, ...], ...]


def canonical_form(g: Graph, colors: list[int] | None = None) -> CanonicalForm:
    """Canonical certificate, canonical ordering and automorphism generators.

    ``colors`` optionally fixes a vertex colouring that isomorphisms must
    respect (smaller colour values come first).
    """
    if g.n == 0:
        return CanonicalForm(0, (), ())
    cells = _initial(g, colors)
    queue = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        queue.append(m)
    cells = _refine(g.adj, cells, queue)
    s = _Search(g)
    s.node(cells, [])
    return CanonicalForm(s.best_cert, tuple(s.best_order), tuple(tuple(p) for p in s.generators))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_form(g).order).with_labels(None)


def certificate(g: Graph) -> tuple[int, int]:
    return (g.n, canonical_form(g).certificate)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).certificate == canonical_form(h).certificate


def orbits(g: Graph) -> list[int]:
    """Orbit representative (smallest member) of each vertex under Aut(g)."""
    form = canonical_form(g)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in form.generators:
        for i, j in enumerate(p):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return [find(v) for v in range(g.n)]
