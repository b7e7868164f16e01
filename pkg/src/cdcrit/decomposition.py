"""Cut vertices, blocks and odd components."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph, components, is_connected, is_connected_set, members, require_connected


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: int  # bitset
    blocks: tuple[int, ...]  # bitsets, ordered by sorted vertex list
    block_cuts: tuple[int, ...]  # cut vertices inside each block

    @property
    def zeta(self) -> int:
        return self.cut_vertices.bit_count()

    @property
    def zeta0(self) -> int:
        return max((c.bit_count() for c in self.block_cuts), default=0)

    @property
    def end_blocks(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.block_cuts) if c.bit_count() == 1)

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if b >> v & 1]

    def to_json(self) -> dict:
        return {
            "cut_vertices": members(self.cut_vertices),
            "blocks": [members(b) for b in self.blocks],
            "block_cut_vertices": [members(c) for c in self.block_cuts],
            "end_blocks": list(self.end_blocks),
            "zeta": self.zeta,
            "zeta0": self.zeta0,
        }


def decompose(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices by the lowpoint depth-first search.

    Bridges are two-vertex blocks. A single vertex forms one trivial block.
    """
    require_connected(g, "block decomposition")
    n = g.n
    if n == 1:
        return BlockDecomposition(0, (1,), (0,))
    disc = [-1] * n
    low = [0] * n
    cut = 0
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    neighbors = [members(a) for a in g.adj]

    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    stack = [(0, -1, iter(neighbors[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((v, w))
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(neighbors[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != 0:
                cut |= 1 << parent
            block = 0
            while True:
                a, b = edge_stack.pop()
                block |= (1 << a) | (1 << b)
                if (a, b) == (parent, v):
                    break
            blocks.append(block)
    if root_children > 1:
        cut |= 1
    blocks.sort(key=members)
    return BlockDecomposition(cut, tuple(blocks), tuple(b & cut for b in blocks))


def cut_vertices(g: Graph) -> list[int]:
    return members(decompose(g).cut_vertices)


def is_biconnected(g: Graph) -> bool:
    """Connected, at least two vertices, no cut vertex (so K2 counts)."""
    return is_connected(g) and g.n >= 2 and decompose(g).cut_vertices == 0


def verify_cut_bound(g: Graph, k: int) -> bool:
    """zeta <= k - 2 and zeta0 <= min(floor((k + 2) / 3), zeta) for a graph with gamma_c = k >= 3."""
    from .domination import gamma_c_value

    if k < 3:
        raise ParameterError(f"cut bound needs k >= 3, got {k}")
    actual = gamma_c_value(g)
    if actual != k:
        raise ParameterError(f"k={k} but gamma_c(G)={actual}")
    dec = decompose(g)
    return dec.zeta <= k - 2 and dec.zeta0 <= min((k + 2) // 3, dec.zeta)


def odd_components(g: Graph, s: int) -> int:
    """Number of odd-order components of G - S."""
    rest = g.full & ~s
    return sum(1 for c in components(g, rest) if c.bit_count() % 2 == 1)


def blocks_bruteforce(g: Graph) -> tuple[int, list[int]]:
    """Independent oracle: cut vertices by deletion, blocks as maximal 2-connected sets.

    A vertex set of size two is a block when it is an edge not contained in a
    larger block; larger sets must induce a connected subgraph with no cut
    vertex. Exponential; for n <= 10.
    """
    require_connected(g, "block decomposition")
    full = g.full
    cut = 0
    for v in range(g.n):
        rest = full & ~(1 << v)
        if rest and len(components(g, rest)) > 1:
            cut |= 1 << v

    def nonseparable(s: int) -> bool:
        if not is_connected_set(g.adj, s):
            return False
        if s.bit_count() <= 2:
            return True
        for v in members(s):
            if not is_connected_set(g.adj, s & ~(1 << v)):
                return False
        return True

    good = [s for s in range(1, full + 1) if s.bit_count() >= 2 and nonseparable(s)]
    if g.n == 1:
        return cut, [1]
    maximal = [s for s in good if not any(t != s and t & s == s for t in good)]
    return cut, sorted(maximal, key=members)
