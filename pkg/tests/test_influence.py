from __future__ import annotations

import itertools
import json
import math

import numpy as np
import pytest

from src.game_core import (
    CapExceededError,
    InfeasibleError,
    InfluenceGame,
    PartialAssignment,
    ValidationError,
    brute_force_extension_count,
    brute_force_psne,
    five_four_outcome,
    load_supreme_court,
)
from src.influence_core import (
    ExtensionCounter,
    GameHypergraph,
    GoalSpec,
    HypergraphCounter,
    SetPreference,
    build_hypergraph,
    complement_edges,
    exact_most_influential,
    feasible_sets_of_size,
    greedy_most_influential,
    hitting_set_instance,
    hypergraph_from_hitting_set,
    is_hitting_set,
    optimal_psne_set,
    players_to_nodes,
    read_goal,
    read_preference,
    write_result,
)
from tests.helpers import coordination_pair, random_game

TRIANGLE = (1, -1, -1, 1, -1, -1, 1, -1, -1)
RECTANGLE = (-1, -1, -1, -1, -1, -1, 1, 1, 1)
HEXAGON = (-1, -1, -1, -1, -1, 1, -1, 1, 1)
ALL_PLUS = (1,) * 9


def _unique(game, goal_x, selected):
    partial = PartialAssignment.from_pairs((i, goal_x[i]) for i in selected)
    return brute_force_extension_count(game, partial) == 1


def _greedy_or_none(game, psne, goal):
    try:
        return greedy_most_influential(game, psne, goal)
    except InfeasibleError:
        return None


@pytest.fixture(scope="module")
def court():
    g = load_supreme_court()
    return g, brute_force_psne(g)


# -------------------------
# Goals and optimal sets
# -------------------------

def test_optimal_set_max_adopters():
    assert optimal_psne_set([(-1, -1), (1, 1)], GoalSpec.max_adopters()) == [(1, 1)]


def test_optimal_set_target():
    assert optimal_psne_set([(-1, -1), (1, 1)], GoalSpec.target_psne((-1, -1))) == [(-1, -1)]


def test_optimal_set_zero_weights_keeps_everything():
    psne = [(1, 1), (-1, -1), (1, -1)]
    assert optimal_psne_set(psne, GoalSpec.weighted_adopters((0.0, 0.0))) == sorted(psne)


def test_optimal_set_errors():
    with pytest.raises(ValidationError):
        optimal_psne_set([], GoalSpec.max_adopters())
    with pytest.raises(ValidationError):
        optimal_psne_set([(1, 1)], GoalSpec.target_psne((-1, 1)))


def test_weighted_goal_depends_on_selection():
    goal = GoalSpec.weighted_adopters((1.0, 2.0))
    assert goal.value((1, 1), frozenset({0, 1})) == 3.0
    assert goal.value((1, 1), frozenset({0})) == -1.0
    assert goal.depends_on_set


def test_set_preference_values():
    assert SetPreference.min_cardinality().value({0, 2}, 4) == -2.0
    assert SetPreference.weighted_nodes((1.0, -2.0, 3.0)).value({0}, 3) == 1.0 + 2.0 - 3.0


# -------------------------
# Hypergraph and hitting set
# -------------------------

def test_hypergraph_validation():
    with pytest.raises(ValidationError):
        GameHypergraph(2, ((1, 1), (1, 1)), 0)
    with pytest.raises(ValidationError):
        GameHypergraph(2, ((1, 1),), 3)
    with pytest.raises(ValidationError):
        build_hypergraph([(1, 1)], (-1, -1))


def test_hitting_set_with_only_goal_edge():
    hg = build_hypergraph([(1, -1, 1)], (1, -1, 1))
    inst = hitting_set_instance(hg)
    assert inst.edges == (inst.universe,)
    assert inst.universe == frozenset({(0, 1), (1, -1), (2, 1)})


def test_hitting_set_single_difference():
    hg = build_hypergraph([(1, 1, 1), (1, -1, 1)], (1, 1, 1))
    assert complement_edges(hitting_set_instance(hg)) == [frozenset({(1, 1)})]


def test_hitting_set_on_three_listed_equilibria():
    hg = build_hypergraph([TRIANGLE, RECTANGLE, HEXAGON], TRIANGLE)
    edges = complement_edges(hitting_set_instance(hg))
    assert len(edges) == 2
    assert all((0, 1) in e for e in edges)
    assert hg.degree((0, 1)) == 1


def test_feasibility_equals_hitting_on_random_psne_sets():
    rng = np.random.default_rng(17)
    all_actions = list(itertools.product((-1, 1), repeat=5))
    for _ in range(100):
        k = int(rng.integers(1, 9))
        picks = rng.choice(len(all_actions), size=k, replace=False)
        psne = [all_actions[int(p)] for p in picks]
        goal = psne[int(rng.integers(0, k))]
        hg = build_hypergraph(psne, goal)
        inst = hitting_set_instance(hg)
        counter = HypergraphCounter(psne)
        for size in range(1, 6):
            for s in itertools.combinations(range(5), size):
                unique = counter(PartialAssignment.from_pairs((i, goal[i]) for i in s)) == 1
                assert unique == is_hitting_set(inst, players_to_nodes(hg, s))


def test_reverse_reduction_round_trip():
    family = [{0, 1}, {1, 2}, {3}]
    hg = hypergraph_from_hitting_set(4, family)
    assert hg.goal == (1, 1, 1, 1)
    counter = HypergraphCounter(hg.hyperedges)
    for size in range(1, 5):
        for s in itertools.combinations(range(4), size):
            hits = all(set(s) & a for a in family)
            assert hits == (counter(PartialAssignment.from_pairs((i, 1) for i in s)) == 1)
    with pytest.raises(ValidationError):
        hypergraph_from_hitting_set(3, [set()])


# -------------------------
# Counting backends
# -------------------------

def test_counters_agree_with_brute_force():
    rng = np.random.default_rng(23)
    for _ in range(20):
        g = random_game(rng, 7, integer=True)
        psne = brute_force_psne(g)
        if not psne:
            continue
        hyper = HypergraphCounter(psne)
        live = ExtensionCounter(g)
        for _ in range(10):
            k = int(rng.integers(0, 7))
            players = rng.choice(7, size=k, replace=False)
            partial = PartialAssignment.from_pairs((int(i), int(rng.choice([-1, 1]))) for i in players)
            expected = brute_force_extension_count(g, partial)
            assert hyper(partial) == expected == live(partial)


def test_hypergraph_counter_needs_psne():
    with pytest.raises(ValidationError):
        HypergraphCounter([])


# -------------------------
# Greedy
# -------------------------

def test_greedy_coordination_pair_with_ties():
    g = coordination_pair()
    res = greedy_most_influential(g, brute_force_psne(g), GoalSpec.target_psne((1, 1)), explore_ties=True)
    assert res.selected == (0,)
    assert res.actions == (1,)
    assert res.dag is not None
    assert res.dag.solutions() == [(0,), (1,)]


def test_greedy_three_listed_equilibria():
    g = InfluenceGame.from_arcs(9, [], [0.0] * 9)
    res = greedy_most_influential(g, [TRIANGLE, RECTANGLE, HEXAGON], GoalSpec.target_psne(TRIANGLE))
    assert res.selected == (0,)
    assert res.rounds[0]["remaining"] == 1


def test_greedy_rejects_dominated_goal():
    g = InfluenceGame.from_arcs(2, [], [0.0, 0.0])
    psne = [(1, -1), (1, 1)]
    with pytest.raises(InfeasibleError):
        greedy_most_influential(g, psne, GoalSpec.target_psne((1, -1)), adopters_only=True)
    with pytest.raises(InfeasibleError):
        exact_most_influential(g, psne, GoalSpec.target_psne((1, -1)), adopters_only=True)


def test_greedy_without_psne_list_uses_live_counts():
    g = coordination_pair()
    res = greedy_most_influential(g, None, GoalSpec.target_psne((-1, -1)))
    assert res.selected == (0,) and res.actions == (-1,)
    with pytest.raises(ValidationError):
        greedy_most_influential(g, None, GoalSpec.max_adopters())


def test_greedy_weighted_tie_break():
    g = coordination_pair()
    res = greedy_most_influential(
        g, brute_force_psne(g), GoalSpec.target_psne((1, 1)), SetPreference.weighted_nodes((1.0, 5.0))
    )
    assert res.selected == (1,)


def test_greedy_no_equilibria_is_infeasible():
    g = InfluenceGame.from_arcs(2, [(0, 1, 1.0), (1, 0, -1.0)], [0.0, 0.0])
    assert brute_force_psne(g) == []
    with pytest.raises(InfeasibleError):
        greedy_most_influential(g, [], GoalSpec.max_adopters())


def test_greedy_is_feasible_monotone_and_within_bound():
    rng = np.random.default_rng(29)
    within_two = 0
    trials = 0
    for _ in range(100):
        n = int(rng.integers(4, 11))
        g = random_game(rng, n, density=0.5, integer=True)
        psne = brute_force_psne(g)
        if not psne:
            continue
        trials += 1
        goal = GoalSpec.target_psne(psne[int(rng.integers(0, len(psne)))])
        res = greedy_most_influential(g, psne, goal)
        best = exact_most_influential(g, psne, goal)
        assert _unique(g, res.goal, res.selected)
        assert _unique(g, best.goal, best.selected)
        remaining = [len(psne)] + [r["remaining"] for r in res.rounds]
        assert all(a > b for a, b in zip(remaining, remaining[1:]))
        assert res.size <= (1 + math.log(len(psne))) * best.size + 1e-9
        within_two += res.size <= best.size + 2
    assert trials > 30
    assert within_two >= 0.9 * trials


def test_greedy_invariant_under_goal_rescaling():
    rng = np.random.default_rng(31)
    for _ in range(20):
        g = random_game(rng, 7, integer=True)
        psne = brute_force_psne(g)
        if len(psne) < 2:
            continue
        t = rng.uniform(0.1, 2.0, size=7)
        a = _greedy_or_none(g, psne, GoalSpec.weighted_adopters(t))
        b = _greedy_or_none(g, psne, GoalSpec.weighted_adopters(3.7 * t))
        assert (a is None) == (b is None)
        if a is not None:
            assert a.selected == b.selected and a.goal == b.goal


def test_greedy_parallel_counts_match_serial():
    rng = np.random.default_rng(37)
    g = random_game(rng, 10, integer=True)
    psne = brute_force_psne(g)
    if not psne:
        pytest.skip("random game has no PSNE")
    goal = GoalSpec.target_psne(psne[-1])
    assert greedy_most_influential(g, psne, goal).selected == \
        greedy_most_influential(g, psne, goal, threads=4).selected


# -------------------------
# Exact
# -------------------------

def test_exact_coordination_pair():
    g = coordination_pair()
    res = exact_most_influential(g, brute_force_psne(g), GoalSpec.target_psne((1, 1)))
    assert res.selected == (0,)


def test_exact_single_equilibrium_needs_nobody():
    g = InfluenceGame.from_arcs(2, [], [-1.0, -1.0])
    res = exact_most_influential(g, brute_force_psne(g), GoalSpec.max_adopters())
    assert res.selected == () and res.goal == (1, 1)


def test_exact_weighted_preference():
    g = coordination_pair()
    psne = brute_force_psne(g)
    goal = GoalSpec.target_psne((1, 1))
    assert exact_most_influential(g, psne, goal, SetPreference.weighted_nodes((-1.0, 2.0))).selected == (1,)
    assert exact_most_influential(g, psne, goal, SetPreference.weighted_nodes((2.0, 3.0))).selected == (0, 1)


def test_exact_weighted_matches_subset_sweep():
    rng = np.random.default_rng(41)
    for _ in range(20):
        g = random_game(rng, 6, integer=True)
        psne = brute_force_psne(g)
        if not psne:
            continue
        goal = GoalSpec.target_psne(psne[0])
        v = rng.normal(size=6)
        pref = SetPreference.weighted_nodes(v)
        res = exact_most_influential(g, psne, goal, pref)
        best = max(
            pref.value(s, 6)
            for k in range(7)
            for s in itertools.combinations(range(6), k)
            if _unique(g, psne[0], s)
        )
        assert pref.value(res.selected, 6) == pytest.approx(best, abs=1e-9)


def test_exact_cap():
    g = InfluenceGame.from_arcs(30, [], [-1.0] * 30)
    with pytest.raises(CapExceededError):
        exact_most_influential(g, [(1,) * 30], GoalSpec.max_adopters())


# -------------------------
# Supreme Court fixture
# -------------------------

def test_court_all_yes_needs_two_justices(court):
    g, psne = court
    assert len(psne) == 7 and ALL_PLUS in psne
    counter = HypergraphCounter(psne)
    assert feasible_sets_of_size(g.n, ALL_PLUS, 1, counter) == []
    pairs = feasible_sets_of_size(g.n, ALL_PLUS, 2, counter)
    assert set(pairs) == {frozenset({c, l}) for c in (0, 1) for l in (5, 6, 7, 8)}
    res = exact_most_influential(g, psne, GoalSpec.target_psne(ALL_PLUS))
    assert res.selected == (0, 5)
    assert [g.label(i) for i in res.selected] == ["Scalia", "Breyer"]


def test_court_greedy_all_yes(court):
    g, psne = court
    res = greedy_most_influential(g, psne, GoalSpec.target_psne(ALL_PLUS))
    assert _unique(g, ALL_PLUS, res.selected)
    assert 2 <= res.size <= (1 + math.log(len(psne))) * 2


def test_court_five_four_needs_a_pair(court):
    g, psne = court
    x = five_four_outcome(g)
    counter = HypergraphCounter(psne)
    # no single justice pins this outcome down with these published weights
    assert feasible_sets_of_size(g.n, x, 1, counter) == []
    for c in (0, 1):
        for l in (5, 6, 7, 8):
            assert _unique(g, x, (c, l))
    res = exact_most_influential(g, psne, GoalSpec.target_psne(x))
    assert res.size == 2 and _unique(g, x, res.selected)


# -------------------------
# Files
# -------------------------

def test_result_json(tmp_path):
    g = coordination_pair()
    res = greedy_most_influential(g, brute_force_psne(g), GoalSpec.target_psne((1, 1)))
    data = json.loads(write_result(res, tmp_path / "r.json").read_text(encoding="utf-8"))
    assert data["selected"] == [0]
    assert data["actions"] == [1]
    assert data["consistent_psne"] == 1
    assert data["rounds"][0]["candidate_counts"] == {"0": 1, "1": 1}


def test_goal_and_preference_specs(tmp_path):
    target = tmp_path / "t.json"
    target.write_text("[1, -1]", encoding="utf-8")
    weights = tmp_path / "w.json"
    weights.write_text(json.dumps({"values": [0.5, 2]}), encoding="utf-8")
    assert read_goal(f"target={target}") == GoalSpec.target_psne((1, -1))
    assert read_goal("max-adopters") == GoalSpec.max_adopters()
    assert read_goal(f"weighted={weights}").weights == (0.5, 2.0)
    assert read_preference("min-card") == SetPreference.min_cardinality()
    assert read_preference(f"weighted={weights}").weights == (0.5, 2.0)
    with pytest.raises(ValidationError):
        read_goal("nonsense")
    with pytest.raises(ValidationError):
        read_goal(f"target={tmp_path / 'missing.json'}")
