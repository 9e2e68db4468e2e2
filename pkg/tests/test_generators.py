import pytest
from hypothesis import given
from hypothesis import strategies as st

from ecadvice import (
    Graph,
    build_coupled_pair,
    build_coupler,
    degeneracy,
    gen_bipartite,
    gen_d_degenerate,
    gen_forest,
    gen_star,
    is_bipartite,
    is_forest,
    serialize_stream,
)


@given(
    st.integers(min_value=2, max_value=30),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=0, max_value=5000),
)
def test_gen_d_degenerate_respects_bound(n, d, seed):
    g = Graph.from_stream(gen_d_degenerate(n, d, seed))
    if g.m:
        assert degeneracy(g)[0] <= d


def test_gen_d_degenerate_deterministic():
    a = gen_d_degenerate(25, 3, 42)
    b = gen_d_degenerate(25, 3, 42)
    assert serialize_stream(a) == serialize_stream(b)
    c = gen_d_degenerate(25, 3, 43)
    assert serialize_stream(a) != serialize_stream(c)


@given(st.integers(min_value=2, max_value=60), st.integers(min_value=0, max_value=5000))
def test_gen_forest_is_forest(n, seed):
    g = Graph.from_stream(gen_forest(n, seed))
    assert g.m >= 1
    assert is_forest(g)
    assert degeneracy(g)[0] == 1


def test_gen_bipartite_complete_when_p_one():
    g = Graph.from_stream(gen_bipartite(3, 4, 1.0, 0))
    assert g.m == 12
    assert is_bipartite(g)


@given(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=0, max_value=1000),
)
def test_gen_bipartite_sides_never_mix(a, b, seed):
    g = Graph.from_stream(gen_bipartite(a, b, 0.7, seed))
    for u, v in g.pairs:
        assert (u < a) != (v < a)


def test_gen_star_shape():
    s = gen_star(5)
    g = Graph.from_stream(s)
    assert g.m == 5 and g.max_degree == 5
    assert all(e.u == 0 for e in s.edges)


def test_coupler_frozen_shape():
    # n=2: 4 core + 2 + 2 pendant-side edges, core vertices at degree 3
    s, left_hub, right_hub = build_coupler(2)
    g = Graph.from_stream(s)
    assert g.m == 8
    assert g.degree[left_hub] == 2 and g.degree[right_hub] == 2
    core = [v for v in g.vertices if v not in (left_hub, right_hub)]
    assert [g.degree[v] for v in core] == [3, 3, 3, 3]
    assert is_bipartite(g)


@pytest.mark.parametrize("n,m", [(1, 5), (2, 10), (3, 17), (4, 26)])
def test_coupled_pair_edge_count(n, m):
    s, e_l, e_r = build_coupled_pair(n)
    g = Graph.from_stream(s)
    assert g.m == m == n * n + 2 * n + 2
    assert g.max_degree == n + 1
    assert is_bipartite(g)
    assert e_l.pair in g.pairs and e_r.pair in g.pairs
    # the marked edges are the pendants: one endpoint has degree 1
    assert min(g.degree[e_l.u], g.degree[e_l.v]) == 1
    assert min(g.degree[e_r.u], g.degree[e_r.v]) == 1
