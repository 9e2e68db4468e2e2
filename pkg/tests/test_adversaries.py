import pytest

from ecadvice import (
    Graph,
    Greedy,
    GreedyVariant,
    NoMonochromeFamily,
    PreconditionViolated,
    build_permutation_instance,
    chromatic_index,
    elimination_game,
    is_bipartite,
    is_forest,
    is_proper,
    konig_color,
    colors_used,
    permutation_game,
    pigeonhole_thresholds,
    prefix_family,
    rigidity_check,
    rounds_to_extinction,
    run_advice,
    select_same_colored_stars,
    variant_family,
)


@pytest.mark.parametrize(
    "delta,alpha,beta",
    [(2, 3, 3), (3, 13, 286), (4, 61, 521855)],
)
def test_pigeonhole_thresholds_frozen(delta, alpha, beta):
    assert pigeonhole_thresholds(delta) == (alpha, beta)


def test_pigeonhole_thresholds_reject_small_delta():
    with pytest.raises(PreconditionViolated):
        pigeonhole_thresholds(1)


def test_select_same_colored_stars_lex_first():
    sets = [frozenset({2}), frozenset({1}), frozenset({2}), frozenset({1})]
    assert select_same_colored_stars(sets, 2) == (0, 2)
    sets = [frozenset({1}), frozenset({2}), frozenset({2}), frozenset({1})]
    assert select_same_colored_stars(sets, 2) == (0, 3)


def test_select_same_colored_stars_needs_a_family():
    with pytest.raises(NoMonochromeFamily):
        select_same_colored_stars([frozenset({1}), frozenset({2})], 2)


def test_elimination_kills_greedy_delta_2():
    t = elimination_game(2, [Greedy()], rounds_to_extinction(1, 3))
    assert t.all_dead
    assert t.colors_used == [3]  # exactly 2*delta - 1
    g = Graph.from_stream(t.stream)
    assert is_forest(g)
    assert g.max_degree <= 2


def test_elimination_kills_greedy_delta_3():
    t = elimination_game(3, [Greedy()], rounds_to_extinction(1, 286))
    assert t.all_dead
    assert t.colors_used == [5]
    g = Graph.from_stream(t.stream)
    assert is_forest(g)
    assert g.max_degree <= 3


def test_elimination_variant_family_b4():
    family = variant_family(4)
    assert len(family) == 16
    budget = rounds_to_extinction(16, 3)
    t = elimination_game(2, family, budget)
    assert t.all_dead
    assert len(t.rounds) <= budget
    for r in t.rounds:
        # the pigeonhole decay, re-checked from the transcript
        assert r.alive_after <= r.alive_before - (-(-r.alive_before // t.beta))
    g = Graph.from_stream(t.stream)
    assert is_forest(g) and g.max_degree <= 2
    assert all(c >= 3 for c in t.colors_used)  # dead means above 2*delta - 2


def test_elimination_stops_early_once_everyone_is_dead():
    t = elimination_game(2, [Greedy()], 5)
    assert t.all_dead
    assert len(t.rounds) == 1  # a lone greedy dies in the first round


def test_rounds_to_extinction_values():
    assert rounds_to_extinction(1, 3) == 1
    assert rounds_to_extinction(16, 3) == 8
    assert rounds_to_extinction(256, 3) == 15
    assert rounds_to_extinction(0, 3) == 0


@pytest.mark.parametrize("delta", [2, 3, 4])
def test_permutation_instance_shape(delta):
    inst = build_permutation_instance(delta)
    g = Graph.from_stream(inst.stream)
    assert g.m == delta**3 + delta
    assert is_bipartite(g)
    assert set(g.degree.values()) == {delta}
    col = konig_color(g)
    assert is_proper(g, col) and colors_used(col) == delta


def test_permutation_instance_rejects_non_permutation():
    with pytest.raises(PreconditionViolated):
        build_permutation_instance(3, (0, 0, 1))


def test_permutation_game_forces_greedy():
    res = permutation_game(2, Greedy)
    assert res.forced and res.report.colors_used >= 3
    assert res.pi == (1, 0)  # greedy colors both stars identically
    res = permutation_game(3, Greedy)
    assert res.forced and res.report.colors_used >= 4


def test_permutation_game_forces_prefix_variants():
    for member in prefix_family(3):
        bits = member.bits
        res = permutation_game(3, lambda: GreedyVariant(bits, cycle=False))
        assert res.forced, f"variant {bits!r} stayed at delta colors"


def test_permutation_game_oracle_consumer_is_immune():
    res = permutation_game(
        3, Greedy, final_run=lambda s: run_advice(s).report
    )
    assert not res.forced
    assert res.report.colors_used == 3 and res.report.optimal


@pytest.mark.parametrize("n", [1, 2])
def test_rigidity_small(n):
    assert rigidity_check(n)


def test_variant_family_sizes():
    assert len(variant_family(0)) == 1
    assert len(variant_family(3)) == 8
    assert len(prefix_family(3)) == 7  # lengths 0, 1, 2
    assert len({m.bits for m in prefix_family(3)}) == 7


def test_permutation_forced_verdict_consistency():
    # chromatic index of the completed instance stays delta, so "forced"
    # really is suboptimality, not an artifact of the instance
    inst = build_permutation_instance(3, (1, 0, 2))
    assert chromatic_index(Graph.from_stream(inst.stream)) == 3
