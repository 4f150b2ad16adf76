from __future__ import annotations

import numpy as np
import pytest

from src.game_core import InfluenceGame, ValidationError, brute_force_psne, is_psne, load_supreme_court
from src.genlearn_core import (
    PREF_ATTACH,
    UNIFORM_RANDOM,
    GenConfig,
    LearnConfig,
    VoteMatrix,
    fit_player,
    gen_erdos_renyi,
    gen_pref_attach,
    gen_uniform_random,
    generate,
    ingest_votes,
    learn_lig,
    learn_lig_with_fits,
    psne_representation_rate,
    read_votes_csv,
    write_votes_csv,
)
from src.solver_core import SearchConfig, enumerate_psne, supermodular_extremes
from tests.helpers import coordination_pair


# -------------------------
# Generators
# -------------------------

def test_erdos_renyi_is_deterministic():
    assert gen_erdos_renyi(12, 0.4, seed=7) == gen_erdos_renyi(12, 0.4, seed=7)
    assert gen_erdos_renyi(12, 0.4, seed=7) != gen_erdos_renyi(12, 0.4, seed=8)


def test_erdos_renyi_without_edges():
    g = gen_erdos_renyi(6, 0.0, seed=3)
    assert g.arcs == ()
    assert all(abs(abs(b) - 1.0) < 1e-12 for b in g.thresholds)


def test_erdos_renyi_unit_sphere_per_node():
    g = gen_erdos_renyi(15, 0.5, seed=11)
    for i in range(g.n):
        total = g.thresholds[i] ** 2 + sum(w * w for _, w in g.in_arcs(i))
        assert abs(total - 1.0) < 1e-12


def test_erdos_renyi_arcs_come_in_opposing_pairs():
    g = gen_erdos_renyi(10, 0.6, seed=2)
    pairs = {(j, i) for j, i, _ in g.arcs}
    assert all((i, j) in pairs for j, i in pairs)


def test_uniform_random_flip_extremes():
    plus = gen_uniform_random(10, 0.5, 0.0, seed=4)
    minus = gen_uniform_random(10, 0.5, 1.0, seed=4)
    assert plus.arcs and all(w == 1.0 for _, _, w in plus.arcs)
    assert all(w == -1.0 for _, _, w in minus.arcs)
    assert [(j, i) for j, i, _ in plus.arcs] == [(j, i) for j, i, _ in minus.arcs]
    assert all(b == 0.0 for b in plus.thresholds)


def test_uniform_random_is_deterministic():
    assert gen_uniform_random(9, 0.5, 0.5, seed=1) == gen_uniform_random(9, 0.5, 0.5, seed=1)


def test_uniform_random_without_flips_is_supermodular():
    for seed in range(10):
        g = gen_uniform_random(12, 0.5, 0.0, seed=seed)
        low, high = supermodular_extremes(g)
        assert is_psne(g, low) and is_psne(g, high)


def test_pref_attach_triangle():
    g = gen_pref_attach(3, seed=0)
    assert len(g.arcs) == 6
    assert all(b == 0.0 for b in g.thresholds)


def test_pref_attach_structure():
    g = gen_pref_attach(30, 3, 0.5, seed=5)
    assert all(b == 0.0 for b in g.thresholds)
    weights = {(j, i): w for j, i, w in g.arcs}
    assert all(weights[(i, j)] == w for (j, i), w in weights.items())
    # triangle plus three links per later node
    assert len(g.undirected_edges()) == 3 + 3 * 27
    assert gen_pref_attach(30, 3, 0.5, seed=5) == g


def test_pref_attach_small_m():
    g = gen_pref_attach(10, 1, 0.0, seed=9)
    assert len(g.undirected_edges()) == 3 + 7


def test_generator_validation():
    with pytest.raises(ValidationError):
        gen_pref_attach(2)
    with pytest.raises(ValidationError):
        gen_uniform_random(5, 1.5, 0.0)
    with pytest.raises(ValidationError):
        GenConfig("lattice", 5)
    with pytest.raises(ValidationError):
        GenConfig(PREF_ATTACH, 10, m=0)


def test_generate_dispatch():
    cfg = GenConfig(UNIFORM_RANDOM, 8, seed=3, arc_p=0.5, flip_p=1.0)
    lines = []
    assert generate(cfg, log_fn=lines.append) == gen_uniform_random(8, 0.5, 1.0, seed=3)
    assert lines and lines[0].startswith("[GEN]")
    assert cfg.to_dict() == {"family": "uniform", "n": 8, "seed": 3, "arc_p": 0.5, "flip_p": 1.0}


@pytest.mark.slow
def test_pref_attach_psne_count_grows_with_n():
    means = []
    for n in (20, 25, 30, 35):
        counts = []
        for seed in range(20):
            _, stats = enumerate_psne(gen_pref_attach(n, 3, 1.0, seed=seed), SearchConfig(count_only=True))
            counts.append(stats.psne_found)
        means.append(float(np.mean(counts)))
    assert all(a < b for a, b in zip(means, means[1:]))


# -------------------------
# Learner
# -------------------------

def test_learned_agreement_is_positive():
    votes = VoteMatrix(((1, 1), (-1, -1), (1, 1), (-1, -1)))
    g = learn_lig(votes)
    assert g.weight(0, 1) > 0 and g.weight(1, 0) > 0


def test_repeated_instance_becomes_psne():
    x = (1, -1, 1, 1, -1)
    g = learn_lig(VoteMatrix((x,) * 5))
    assert is_psne(g, x)
    assert psne_representation_rate(g, [x]) == 1.0


def test_strong_regularization_shrinks_everything():
    rng = np.random.default_rng(17)
    rows = tuple(tuple(int(a) for a in rng.choice([-1, 1], size=4)) for _ in range(20))
    g = learn_lig(VoteMatrix(rows), LearnConfig(l2_lambda=1e6))
    assert float(np.max(np.abs(g.weights))) < 1e-5
    assert float(np.max(np.abs(g.b))) < 1e-5


def test_objective_decreases_monotonically():
    rng = np.random.default_rng(19)
    X = rng.choice([-1.0, 1.0], size=(30, 5))
    fit = fit_player(X, 2, LearnConfig(l2_lambda=0.05))
    assert len(fit.objective) > 1
    assert all(b <= a for a, b in zip(fit.objective, fit.objective[1:]))
    assert fit.converged
    assert set(fit.weights) == {0, 1, 3, 4}


def test_signs_recovered_on_mixed_pairs():
    # anti-coordination pair 0-1 next to a coordination pair 2-3
    truth = InfluenceGame.from_arcs(
        4, [(0, 1, -1.0), (1, 0, -1.0), (2, 3, 1.0), (3, 2, 1.0)], [0.0] * 4
    )
    psne = brute_force_psne(truth)
    assert len(psne) == 4
    g = learn_lig(VoteMatrix(tuple(psne)))
    for j, i, w in truth.arcs:
        assert np.sign(g.weight(j, i)) == np.sign(w)
    assert all(is_psne(g, x) for x in psne)


def test_non_convergence_is_reported():
    votes = VoteMatrix(((1, 1, -1), (-1, -1, 1), (1, -1, 1)))
    lines = []
    g, fits = learn_lig_with_fits(votes, LearnConfig(max_iters=1), log_fn=lines.append)
    assert g.n == 3
    assert not any(f.converged for f in fits)
    assert all(f.iterations == 1 for f in fits)
    assert sum(line.startswith("[WARN]") for line in lines) == 3


def test_parallel_learning_matches_serial():
    rng = np.random.default_rng(23)
    rows = tuple(tuple(int(a) for a in rng.choice([-1, 1], size=6)) for _ in range(25))
    votes = VoteMatrix(rows)
    assert learn_lig(votes, threads=3) == learn_lig(votes)


def test_learner_needs_two_players():
    with pytest.raises(ValidationError):
        learn_lig(VoteMatrix(((1,), (-1,))))
    with pytest.raises(ValidationError):
        LearnConfig(l2_lambda=0.0)


def test_learned_labels_follow_votes():
    votes = VoteMatrix(((1, 1), (-1, -1)), ("a", "b"))
    assert learn_lig(votes).labels == ("a", "b")


# -------------------------
# Representation rate
# -------------------------

def test_representation_rate_extremes():
    g = coordination_pair()
    assert psne_representation_rate(g, brute_force_psne(g)) == 1.0
    assert psne_representation_rate(g, [(1, -1)]) == 0.0
    assert psne_representation_rate(g, VoteMatrix(((1, 1), (1, -1)))) == 0.5


def test_representation_rate_on_court():
    court = load_supreme_court()
    assert psne_representation_rate(court, [(1,) * 9]) == 1.0


def test_representation_rate_without_instances_is_zero():
    assert psne_representation_rate(coordination_pair(), []) == 0.0


def test_representation_rate_length_mismatch():
    with pytest.raises(ValidationError):
        psne_representation_rate(coordination_pair(), [(1, 1, 1)])


# -------------------------
# Votes
# -------------------------

def test_all_yes_codes():
    votes = ingest_votes([[1] * 9])
    assert votes.instances == ((1,) * 9,)


def test_majority_code_follows_the_bench():
    votes = ingest_votes([[1, 1, 1, 1, 6, 1, 1, 1, 1], [2, 2, 3, 7]])
    assert votes.instances[0] == (1,) * 9
    assert votes.instances[1] == (-1, -1, 1, -1)


def test_majority_code_even_split_resolves_to_plus():
    lines = []
    votes = ingest_votes([[1, 2, 6]], log_fn=lines.append)
    assert votes.instances == ((1, -1, 1),)
    assert any(line.startswith("[WARN]") for line in lines)


def test_unmapped_and_unresolvable_codes():
    with pytest.raises(ValidationError):
        ingest_votes([[1, 8, 1]])
    with pytest.raises(ValidationError):
        ingest_votes([[6, 7]])
    with pytest.raises(ValidationError):
        ingest_votes([[1, 1], [1]])
    with pytest.raises(ValidationError):
        ingest_votes([["yes", 1]])


def test_vote_matrix_rejects_bad_rows():
    with pytest.raises(ValidationError):
        VoteMatrix(((1, 0),))
    with pytest.raises(ValidationError):
        VoteMatrix(())


def test_votes_csv_codes(tmp_path):
    path = tmp_path / "votes.csv"
    path.write_text("A,B,C\n1,2,6\n3,4,5\n2,2,7\n", encoding="utf-8")
    votes = read_votes_csv(path)
    assert votes.labels == ("A", "B", "C")
    assert votes.instances == ((1, -1, 1), (1, 1, 1), (-1, -1, -1))


def test_votes_csv_actions_round_trip(tmp_path):
    votes = VoteMatrix(((1, -1, 1), (-1, -1, 1)), ("x", "y", "z"))
    path = write_votes_csv(votes, tmp_path / "out" / "votes.csv")
    assert read_votes_csv(path) == votes


def test_votes_csv_missing(tmp_path):
    with pytest.raises(ValidationError):
        read_votes_csv(tmp_path / "nope.csv")
