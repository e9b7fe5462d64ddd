from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

import pytest

from mixdom.graph import Graph, parse_gr

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture
def g1() -> Graph:
    """The running 5-vertex example graph: edges 12, 13, 14, 23, 34, 45."""
    return parse_gr(fixture_text("g1.gr"))


def gnp_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi graph on n vertices with edge probability p."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform-ish random tree: each vertex attaches to a random earlier one."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def all_graphs(n: int):
    """Every labeled simple graph on vertex set 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adjacency(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.vertex_count


def connected_graphs_up_to(n_max: int):
    """All connected labeled graphs with 1 <= n <= n_max vertices."""
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            if is_connected(g):
                yield g
