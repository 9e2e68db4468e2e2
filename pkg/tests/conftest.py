"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from ecadvice import EdgeStream, Graph, stream_from_pairs


def stream(pairs) -> EdgeStream:
    return stream_from_pairs(pairs)


def graph(pairs) -> Graph:
    return Graph.from_stream(stream_from_pairs(pairs))


def path_pairs(m: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(m)]


def cycle_pairs(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def star_pairs(leaves: int) -> list[tuple[int, int]]:
    return [(0, i) for i in range(1, leaves + 1)]


def complete_pairs(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def biclique_pairs(a: int, b: int) -> list[tuple[int, int]]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def petersen_pairs() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return outer + inner + spokes


@pytest.fixture
def petersen() -> Graph:
    return graph(petersen_pairs())


@st.composite
def random_pair_lists(draw, max_vertices: int = 12, max_edges: int = 20):
    """Simple-graph edge lists in arrival order, possibly empty."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(
        st.lists(st.sampled_from(all_pairs), max_size=max_edges, unique=True)
    )
    return chosen


@st.composite
def degenerate_streams(draw, max_n: int = 24, max_d: int = 3):
    """Streams produced by the seeded d-degenerate generator."""
    from ecadvice import gen_d_degenerate

    n = draw(st.integers(min_value=2, max_value=max_n))
    d = draw(st.integers(min_value=1, max_value=max_d))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    return gen_d_degenerate(n, d, seed), d


def gnp_pairs(n: int, p: float, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
