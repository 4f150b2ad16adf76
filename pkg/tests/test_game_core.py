from __future__ import annotations

import itertools

import numpy as np
import pytest

from src.game_core import (
    CapExceededError,
    DomainVector,
    InfluenceGame,
    PartialAssignment,
    ValidationError,
    best_responses,
    brute_force_extension_count,
    brute_force_psne,
    five_four_outcome,
    game_from_dict,
    game_to_dict,
    influence,
    is_psne,
    load_supreme_court,
    payoff,
    read_game,
    supreme_court_from_table,
    write_game,
)
from tests.helpers import anti_coordination_pair, clique, coordination_pair, random_game


def single_arc_pair() -> InfluenceGame:
    return InfluenceGame.from_arcs(2, [(1, 0, 1.0)], [0.0, 0.0])


def test_influence_single_arc_and_sign_flip():
    g = single_arc_pair()
    assert influence(g, 0, (1, 1)) == 1.0
    assert influence(g, 0, (1, -1)) == -1.0


def test_influence_ignores_own_action():
    g = single_arc_pair()
    assert influence(g, 0, (1, 1)) == influence(g, 0, (-1, 1))


def test_influence_rejects_bad_index():
    with pytest.raises(ValidationError):
        influence(single_arc_pair(), 2, (1, 1))


def test_supreme_court_scalia_all_plus():
    g = load_supreme_court()
    assert g.label(0) == "Scalia"
    assert influence(g, 0, (1,) * 9) == pytest.approx(0.6342, abs=1e-9)


def test_fixture_json_matches_raw_table():
    a, b = load_supreme_court(), supreme_court_from_table()
    assert a.labels == b.labels
    np.testing.assert_allclose(a.weights, b.weights)
    np.testing.assert_allclose(a.b, b.b)


def test_payoff_values():
    g = single_arc_pair()
    assert payoff(g, 0, (1, 1)) == 1.0
    assert payoff(g, 0, (-1, 1)) == -1.0
    assert payoff(g, 0, (-1, -1)) == 1.0


@pytest.mark.parametrize("b, expected", [(-2.0, {1}), (0.0, {-1, 1}), (0.5, {-1})])
def test_best_responses(b, expected):
    g = InfluenceGame.from_arcs(1, [], [b])
    assert set(best_responses(g, 0, (1,))) == expected


@pytest.mark.parametrize("eps", [0.0, 0.05, 0.3])
def test_best_responses_monotone_in_influence(eps):
    rng = np.random.default_rng(int(eps * 1000) + 11)
    borders = [eps, -eps, np.nextafter(eps, np.inf), np.nextafter(-eps, -np.inf),
               np.nextafter(eps, -np.inf), np.nextafter(-eps, np.inf)]
    fs = sorted({float(f) for f in [*rng.uniform(-2.0, 2.0, 200), *borders]})
    picked = []
    for f in fs:
        g = InfluenceGame.from_arcs(1, [], [-f], tie_epsilon=eps)
        br = best_responses(g, 0, (1,))
        if f > eps:
            assert br == {1}
        elif f < -eps:
            assert br == {-1}
        else:
            assert br == {-1, 1}
        picked.append((min(br), max(br)))
    assert picked == sorted(picked)


def test_tie_epsilon_widens_indifference():
    g = InfluenceGame.from_arcs(1, [], [0.01], tie_epsilon=0.05)
    assert set(best_responses(g, 0, (1,))) == {-1, 1}


def test_is_psne_pairs():
    assert is_psne(coordination_pair(), (1, 1))
    assert not is_psne(coordination_pair(), (1, -1))
    assert is_psne(anti_coordination_pair(), (1, -1))


def test_brute_force_examples():
    assert brute_force_psne(coordination_pair()) == [(-1, -1), (1, 1)]
    assert brute_force_psne(clique(3)) == [(-1, -1, -1), (1, 1, 1)]
    assert brute_force_psne(InfluenceGame.from_arcs(1, [], [0.5])) == [(-1,)]


def test_brute_force_cap():
    g = InfluenceGame.from_arcs(30, [], [0.0] * 30)
    with pytest.raises(CapExceededError):
        brute_force_psne(g)


def test_extension_counts():
    g = coordination_pair()
    assert brute_force_extension_count(g, PartialAssignment.from_pairs([(1, 1)])) == 1
    assert brute_force_extension_count(g, PartialAssignment()) == 2
    assert brute_force_extension_count(g, PartialAssignment.from_pairs([(0, 1), (1, -1)])) == 0


def test_partial_rejects_duplicates():
    with pytest.raises(ValidationError):
        PartialAssignment.from_pairs([(0, 1), (0, -1)])


def test_brute_force_matches_is_psne_on_random_games():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(2, 8))
        g = random_game(rng, n, integer=bool(rng.integers(0, 2)))
        expected = [x for x in itertools.product((-1, 1), repeat=n) if is_psne(g, x)]
        assert brute_force_psne(g) == expected


def test_brute_force_threads_do_not_change_result():
    rng = np.random.default_rng(3)
    g = random_game(rng, 16, density=0.3, integer=True)
    assert brute_force_psne(g, threads=4) == brute_force_psne(g)


def test_payoff_antisymmetry_and_scaling():
    rng = np.random.default_rng(11)
    g = random_game(rng, 5)
    for x in itertools.product((-1, 1), repeat=5):
        for i in range(5):
            y = list(x)
            y[i] = -y[i]
            assert payoff(g, i, x) == pytest.approx(-payoff(g, i, y))
    scaled = InfluenceGame.from_matrix(g.weights * 3.0, g.b * 3.0)
    for x in itertools.product((-1, 1), repeat=5):
        for i in range(5):
            assert best_responses(scaled, i, x) == best_responses(g, i, x)


def test_game_rejects_invalid_structures():
    with pytest.raises(ValidationError):
        InfluenceGame.from_arcs(2, [(0, 0, 1.0)], [0.0, 0.0])
    with pytest.raises(ValidationError):
        InfluenceGame.from_arcs(2, [(0, 1, 1.0)], [0.0])
    with pytest.raises(ValidationError):
        InfluenceGame.from_arcs(0, [], [])
    with pytest.raises(ValidationError):
        InfluenceGame.from_arcs(2, [], [0.0, 0.0], tie_epsilon=-1.0)


def test_game_json_file(tmp_path):
    g = InfluenceGame.from_arcs(3, [(0, 1, 2.5), (2, 1, -1.0)], [0.0, 1.0, -0.5], labels=["a", "b", "c"])
    path = write_game(g, tmp_path / "g.json")
    assert read_game(path) == g
    assert game_to_dict(g)["arcs"] == [[0, 1, 2.5], [2, 1, -1.0]]


def test_reader_rejects_nonzero_self_arc():
    with pytest.raises(ValidationError):
        game_from_dict({"n": 2, "thresholds": [0, 0], "arcs": [[1, 1, 0.5]]})


def test_domain_vector_masks():
    d = DomainVector.from_partial(3, PartialAssignment.from_pairs([(1, -1)]))
    assert d.masks() == [3, 1, 3]
    assert DomainVector.from_masks([3, 0, 2]).contradiction


def test_five_four_outcome_is_psne():
    g = load_supreme_court()
    x = five_four_outcome(g)
    assert x == (1, 1, 1, 1, 1, -1, -1, -1, -1)
    assert is_psne(g, x)
    assert is_psne(g, (1,) * 9)
