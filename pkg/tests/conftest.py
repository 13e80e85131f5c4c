from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

from twospan import Graph, build_graph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def c6() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])


@pytest.fixture
def k4() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k23() -> Graph:
    # parts {0, 1} and {2, 3, 4}
    return build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


@pytest.fixture
def bowtie() -> Graph:
    # two triangles sharing vertex 0
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


@pytest.fixture
def theta() -> Graph:
    # hubs 0 and 3 joined by paths 0-1-3, 0-2-3 and the edge 0-3
    return build_graph(4, [(0, 1), (1, 3), (0, 2), (2, 3), (0, 3)])


@pytest.fixture
def c6_chord() -> Graph:
    # six-cycle plus the chord (0, 3)
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random spanning tree plus ``extra`` random further edges."""
    edges = set()
    order = list(range(n))
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = order[i], order[j]
        edges.add((min(a, b), max(a, b)))
    pool = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    for _ in range(min(extra, len(pool))):
        k = rng.randrange(len(pool))
        edges.add(pool.pop(k))
    return build_graph(n, sorted(edges))
