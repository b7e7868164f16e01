from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from cdcrit.graph import Graph, build, is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = build(n, [p for p, keep in zip(pairs, chosen) if keep])
    if connected:
        # join the components into a path so every draw is usable
        from cdcrit.graph import add_edge, components

        comps = components(g)
        for a, b in zip(comps, comps[1:]):
            g = add_edge(g, (a & -a).bit_length() - 1, (b & -b).bit_length() - 1)
    return g


def random_graph(rng: random.Random, n: int, p: float, connected: bool = True) -> Graph:
    while True:
        g = build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if not connected or is_connected(g):
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(7)
