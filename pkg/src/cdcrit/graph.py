"""Immutable simple graphs on dense vertex indices with bitset adjacency.

Vertex sets are plain Python ints used as bitsets (bit ``v`` set means vertex
``v`` is a member). Public functions accept any iterable of vertices where a
vertex set is expected and convert with :func:`mask_of`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeExistsError,
    EmptyVertexSetError,
    JoinError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


def mask_of(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitset of ``v``. ``labels`` is advisory metadata
    (the vertex names used by the constructions) and takes no part in equality or hashing.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        """Missing pairs ``(u, v)``, ``u < v``, in lexicographic order."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def find(self, label: str) -> int:
        """Index of the vertex carrying ``label``."""
        if self.labels is None or label not in self.labels:
            raise KeyError(label)
        return self.labels.index(label)

    def vertices_labeled(self, *labels: str) -> list[int]:
        return [self.find(lab) for lab in labels]

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, tuple(labels) if labels is not None else None)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or v < 0 or v >= n:
        raise VertexRangeError(f"vertex {v!r} outside 0..{n - 1}")


def build(n: int, edges: Iterable[Edge], labels: Sequence[str] | None = None) -> Graph:
    """Graph on ``n`` vertices with exactly ``edges``.

    Raises VertexRangeError, SelfLoopError or DuplicateEdgeError on bad input.
    """
    if n < 0:
        raise VertexRangeError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is not None and len(labels) != n:
        raise ValueError("labels must name every vertex")
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def from_adjacency(adj: Sequence[int], labels: Sequence[str] | None = None) -> Graph:
    """Wrap neighbor bitsets that are already symmetric and loop-free."""
    return Graph(len(adj), tuple(adj), tuple(labels) if labels is not None else None)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """``G + uv`` as a new graph; ``g`` is left untouched."""
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise SelfLoopError(f"self-loop at {u}")
    if g.has_edge(u, v):
        raise EdgeExistsError(f"({u}, {v}) is already an edge")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise KeyError((u, v))
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)), g.labels)


def induced(g: Graph, s: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` plus the old-to-new index map."""
    verts = members(mask_of(s) & g.full) if isinstance(s, int) else sorted(set(s))
    if not verts:
        raise EmptyVertexSetError("induced subgraph of an empty vertex set")
    for v in verts:
        _check_vertex(g.n, v)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in members(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        adj.append(row)
    labels = tuple(g.labels[v] for v in verts) if g.labels is not None else None
    return Graph(len(verts), tuple(adj), labels), index


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``g``'s vertex ``order[i]``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        row = 0
        for u in members(g.adj[v]):
            row |= 1 << pos[u]
        adj.append(row)
    labels = tuple(g.labels[v] for v in order) if g.labels is not None else None
    return Graph(g.n, tuple(adj), labels)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    labels: list[str] | None = []
    for g in graphs:
        off = len(adj)
        adj.extend(a << off for a in g.adj)
        if labels is not None and g.labels is not None:
            labels.extend(g.labels)
        else:
            labels = None
    return Graph(len(adj), tuple(adj), tuple(labels) if labels else None)


# -- standard small graphs -------------------------------------------------


def complete_graph(n: int, name: str | None = None) -> Graph:
    full = (1 << n) - 1
    labels = None if name is None else tuple(f"{name}_{i}" for i in range(1, n + 1))
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)), labels)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexRangeError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at index 0."""
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- joins -----------------------------------------------------------------


@dataclass(frozen=True)
class Link:
    left: str
    right: str
    mode: str  # "full", "restricted" or "edge"
    marked: frozenset[int] | None = None
    endpoints: tuple[int, int] | None = None


@dataclass
class JoinExpr:
    """Named vertex-disjoint pieces plus the join edges between them.

    Chains such as ``x1 v K3 v x2 v x3`` are added with :meth:`chain`; a
    restricted join ``G1 v_H G2`` adds edges from every vertex of ``G1`` to the
    marked vertices of ``G2`` only.
    """

    pieces: dict[str, Graph] = field(default_factory=dict)
    links: list[Link] = field(default_factory=list)

    def add(self, name: str, piece: Graph) -> JoinExpr:
        if name in self.pieces:
            raise JoinError(f"piece {name!r} defined twice")
        self.pieces[name] = piece
        return self

    def vertex(self, name: str) -> JoinExpr:
        return self.add(name, Graph(1, (0,), (name,)))

    def _check(self, left: str, right: str) -> None:
        for name in (left, right):
            if name not in self.pieces:
                raise JoinError(f"unknown piece {name!r}")
        if left == right:
            raise JoinError(f"piece {left!r} cannot be joined to itself (operands overlap)")

    def chain(self, *names: str) -> JoinExpr:
        for a, b in zip(names, names[1:]):
            self._check(a, b)
            self.links.append(Link(a, b, "full"))
        return self

    def restricted(self, left: str, right: str, marked: Iterable[int]) -> JoinExpr:
        self._check(left, right)
        marked = frozenset(marked)
        if not marked or any(not 0 <= h < self.pieces[right].n for h in marked):
            raise JoinError(f"marked subset {sorted(marked)} is not a vertex subset of {right!r}")
        self.links.append(Link(left, right, "restricted", marked=marked))
        return self

    def edge(self, left: str, right: str, left_vertex: int = 0, right_vertex: int = 0) -> JoinExpr:
        self._check(left, right)
        if not 0 <= left_vertex < self.pieces[left].n or not 0 <= right_vertex < self.pieces[right].n:
            raise JoinError("edge endpoint outside its piece")
        self.links.append(Link(left, right, "edge", endpoints=(left_vertex, right_vertex)))
        return self

    def offsets(self) -> dict[str, int]:
        out, off = {}, 0
        for name, piece in self.pieces.items():
            out[name] = off
            off += piece.n
        return out


def join(expr: JoinExpr) -> Graph:
    """Disjoint union of the pieces plus every join edge of ``expr``."""
    offsets = expr.offsets()
    adj: list[int] = []
    labels: list[str] = []
    for name, piece in expr.pieces.items():
        off = offsets[name]
        adj.extend(a << off for a in piece.adj)
        if piece.labels is not None:
            labels.extend(piece.labels)
        elif piece.n == 1:
            labels.append(name)
        else:
            labels.extend(f"{name}_{i}" for i in range(1, piece.n + 1))

    def connect(u: int, v: int) -> None:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    for link in expr.links:
        lo, ro = offsets[link.left], offsets[link.right]
        left_n = expr.pieces[link.left].n
        if link.mode == "full":
            targets = [ro + i for i in range(expr.pieces[link.right].n)]
        elif link.mode == "restricted":
            targets = [ro + i for i in sorted(link.marked)]
        else:
            a, b = link.endpoints
            connect(lo + a, ro + b)
            continue
        for i in range(left_n):
            for t in targets:
                connect(lo + i, t)
    return Graph(len(adj), tuple(adj), tuple(labels))


# -- connectivity and distances --------------------------------------------


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitset of vertices reachable from bitset ``start`` inside ``allowed``."""
    seen = frontier = start & allowed
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as bitsets) of the subgraph induced by ``within``."""
    rest = g.full if within is None else within
    out = []
    while rest:
        comp = reach(g.adj, rest & -rest, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return reach(g.adj, 1, g.full) == g.full


def is_connected_set(adj: Sequence[int], s: int) -> bool:
    return s != 0 and reach(adj, s & -s, s) == s


def require_connected(g: Graph, what: str = "operation") -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} needs a connected graph")


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= g.adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
        for v in members(frontier):
            dist[v] = d
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Length of a shortest u-v path, or ``None`` when v is unreachable."""
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    return bfs_distances(g, u)[v]


def eccentricity(g: Graph, v: int) -> int | None:
    dist = bfs_distances(g, v)
    if any(d is None for d in dist):
        return None
    return max(dist)


def diameter(g: Graph) -> int:
    require_connected(g, "diameter")
    return max(eccentricity(g, v) for v in range(g.n))


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in decreasing numeric order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
