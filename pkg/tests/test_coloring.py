import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecadvice import (
    Graph,
    NotBipartite,
    PreconditionViolated,
    ResourceLimit,
    brute_force_chromatic_index,
    brute_force_colorable,
    chromatic_index,
    color_degenerate,
    colors_used,
    exact_color,
    gen_bipartite,
    gen_d_degenerate,
    is_proper,
    konig_color,
    vizing_plus_one,
)

from .conftest import (
    biclique_pairs,
    complete_pairs,
    cycle_pairs,
    gnp_pairs,
    graph,
    path_pairs,
    petersen_pairs,
    random_pair_lists,
    star_pairs,
)

# fixed small corpus shared by the engine cross-checks (m <= 14 each)
CORPUS = [
    path_pairs(1),
    path_pairs(4),
    path_pairs(7),
    cycle_pairs(3),
    cycle_pairs(4),
    cycle_pairs(5),
    cycle_pairs(6),
    cycle_pairs(7),
    star_pairs(3),
    star_pairs(6),
    complete_pairs(4),
    biclique_pairs(2, 3),
    biclique_pairs(3, 3),
    petersen_pairs()[:10],
    complete_pairs(4) + [(0, 4), (4, 5)],  # K4 with a tail
]


def product_colorable(g: Graph, k: int) -> bool:
    """Literal scan of all k^m assignments; only for the tiniest graphs."""
    for combo in itertools.product(range(1, k + 1), repeat=g.m):
        if is_proper(g, {e.pair: c for e, c in zip(g.edges, combo)}):
            return True
    return g.m == 0


@pytest.mark.parametrize("pairs", [p for p in CORPUS if len(p) <= 6])
def test_brute_force_matches_literal_product(pairs):
    g = graph(pairs)
    for k in range(1, 4):
        assert brute_force_colorable(g, k) == product_colorable(g, k)


@pytest.mark.parametrize("pairs", CORPUS)
def test_exact_color_matches_brute_force(pairs):
    g = graph(pairs)
    chi = brute_force_chromatic_index(g)
    for k in range(max(1, chi - 1), g.max_degree + 2):
        witness = exact_color(g, k)
        assert (witness is not None) == (k >= chi)
        if witness is not None:
            assert is_proper(g, witness)
            assert colors_used(witness) <= k


def test_chromatic_index_frozen_values():
    assert chromatic_index(graph(complete_pairs(4))) == 3
    assert chromatic_index(graph(cycle_pairs(5))) == 3  # odd cycle is class 2
    assert chromatic_index(graph(cycle_pairs(6))) == 2
    assert chromatic_index(graph(star_pairs(7))) == 7
    assert chromatic_index(graph(petersen_pairs())) == 4  # classic class-2 cubic graph


def test_chromatic_index_empty():
    assert chromatic_index(Graph(())) == 0


@pytest.mark.parametrize("pairs", CORPUS)
def test_chromatic_index_matches_brute_force(pairs):
    g = graph(pairs)
    assert chromatic_index(g) == brute_force_chromatic_index(g)


def test_exact_color_fixed_and_forbidden():
    g = graph(cycle_pairs(4))
    col = exact_color(g, 2, fixed={(0, 1): 2})
    assert col is not None and col[(0, 1)] == 2
    col = exact_color(g, 2, forbidden={(0, 1): frozenset({1})})
    assert col is not None and col[(0, 1)] == 2
    # pinning adjacent edges to one color is unsatisfiable
    assert exact_color(g, 3, fixed={(0, 1): 1, (1, 2): 1}) is None


def test_exact_color_fixed_must_exist():
    with pytest.raises(PreconditionViolated):
        exact_color(graph(path_pairs(1)), 2, fixed={(5, 6): 1})


def test_exact_color_budget_trips():
    g = graph(petersen_pairs())
    with pytest.raises(ResourceLimit):
        exact_color(g, 3, budget=5)


@given(random_pair_lists(max_vertices=8, max_edges=10))
@settings(max_examples=60)
def test_exact_color_agrees_with_brute_force_random(pairs):
    g = graph(pairs)
    if g.m == 0:
        return
    chi = brute_force_chromatic_index(g)
    assert exact_color(g, chi) is not None
    if chi > 1:
        assert exact_color(g, chi - 1) is None


@pytest.mark.parametrize("pairs,expected", [(cycle_pairs(5), 3), (star_pairs(5), 5)])
def test_vizing_frozen(pairs, expected):
    g = graph(pairs)
    col = vizing_plus_one(g, check=True)
    assert is_proper(g, col)
    assert colors_used(col) == expected


@given(random_pair_lists(max_vertices=14, max_edges=20))
@settings(max_examples=80)
def test_vizing_proper_within_delta_plus_one(pairs):
    g = graph(pairs)
    if g.m == 0:
        return
    col = vizing_plus_one(g, check=True)
    assert is_proper(g, col)
    assert len(col) == g.m
    assert colors_used(col) <= g.max_degree + 1
    assert max(col.palette) <= g.max_degree + 1


def test_vizing_on_sparse_random_graph():
    g = graph(gnp_pairs(200, 0.05, 11))
    col = vizing_plus_one(g, check=True)
    assert is_proper(g, col) and len(col) == g.m
    assert colors_used(col) <= g.max_degree + 1


def test_konig_even_cycle_and_biclique():
    col = konig_color(graph(cycle_pairs(6)))
    assert colors_used(col) == 2
    col = konig_color(graph(biclique_pairs(3, 3)))
    assert colors_used(col) == 3


def test_konig_rejects_odd_cycle():
    with pytest.raises(NotBipartite):
        konig_color(graph(cycle_pairs(5)))


@given(
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=500),
)
@settings(max_examples=60)
def test_konig_uses_exactly_delta(a, b, seed):
    g = Graph.from_stream(gen_bipartite(a, b, 0.6, seed))
    if g.m == 0:
        return
    col = konig_color(g)
    assert is_proper(g, col) and len(col) == g.m
    assert colors_used(col) == g.max_degree


def test_color_degenerate_star():
    g = graph(star_pairs(4))
    col = color_degenerate(g, 1)
    assert is_proper(g, col)
    assert colors_used(col) == 4


def test_color_degenerate_preconditions():
    # C5 has degeneracy 2 but max degree 2 < 2d
    with pytest.raises(PreconditionViolated):
        color_degenerate(graph(cycle_pairs(5)), 2)
    # degeneracy above the claimed bound
    with pytest.raises(PreconditionViolated):
        color_degenerate(graph(complete_pairs(4)), 1)


@given(st.integers(min_value=6, max_value=40), st.integers(min_value=0, max_value=300))
@settings(max_examples=40)
def test_color_degenerate_random_forests(n, seed):
    from ecadvice import gen_forest

    g = Graph.from_stream(gen_forest(n, seed))
    if g.max_degree < 2:
        return
    col = color_degenerate(g, 1)
    assert is_proper(g, col)
    assert colors_used(col) == g.max_degree


@given(st.integers(min_value=4, max_value=24), st.integers(min_value=0, max_value=300))
@settings(max_examples=30)
def test_chromatic_index_random_degenerate(n, seed):
    g = Graph.from_stream(gen_d_degenerate(n, 2, seed))
    if g.m == 0:
        return
    chi = chromatic_index(g)
    assert chi in (g.max_degree, g.max_degree + 1)
    witness = exact_color(g, chi)
    assert witness is not None and is_proper(g, witness)
