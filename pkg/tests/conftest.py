import random

import pytest
from hypothesis import strategies as st

from critcolor.graphs import Graph, from_edges


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pair_count = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << pair_count) - 1)) if pair_count else 0
    edges = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if bits >> i & 1:
                edges.append((u, v))
            i += 1
    return from_edges(n, edges)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)
