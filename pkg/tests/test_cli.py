from __future__ import annotations

import json

import numpy as np
import pytest

from src.cli_core import (
    EXIT_BUDGET,
    EXIT_ERROR,
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_VALIDATION,
    CliApp,
    exit_code_for,
)
from src.cli_core.commands import get_command_classes
from src.game_core import (
    BudgetExhaustedError,
    CapExceededError,
    InfeasibleError,
    InfluenceGame,
    LigError,
    NotApplicableError,
    ValidationError,
    brute_force_psne,
    read_game,
    write_game,
)
from src.orchestration_core import Settings, read_manifest, write_manifest
from src.solver_core import read_psne
from tests.helpers import clique, coordination_pair, random_forest


@pytest.fixture(autouse=True)
def _no_settings_file(tmp_path, monkeypatch):
    # keep ./lig_settings.json lookups inside the test directory
    monkeypatch.chdir(tmp_path)


def run(*argv) -> int:
    return CliApp(stream=None).run([str(a) for a in argv])


def _manifest(out):
    return read_manifest(f"{out}.manifest.json")


# -------------------------
# Registry / exit codes
# -------------------------

def test_registry_order_and_ids():
    ids = [c.COMMAND_ID for c in get_command_classes()]
    assert ids == ["generate", "solve", "influential", "scenario", "learn", "bench", "gadget", "transform", "replay"]
    assert len(set(ids)) == len(ids)


def test_exit_code_mapping():
    assert exit_code_for(ValidationError("x")) == EXIT_VALIDATION
    assert exit_code_for(CapExceededError("x")) == EXIT_VALIDATION
    assert exit_code_for(NotApplicableError("x")) == EXIT_VALIDATION
    assert exit_code_for(InfeasibleError("x")) == EXIT_INFEASIBLE
    assert exit_code_for(BudgetExhaustedError("x")) == EXIT_BUDGET
    assert exit_code_for(LigError("x")) == EXIT_ERROR
    assert exit_code_for(RuntimeError("x")) == EXIT_ERROR


# -------------------------
# solve
# -------------------------

def test_solve_coordination_pair(tmp_path):
    game = write_game(coordination_pair(), tmp_path / "pair.json")
    out = tmp_path / "psne.txt"
    assert run("solve", game, "--out", out) == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert sorted(lines) == ["-1,-1", "1,1"]

    manifest = _manifest(out)
    assert manifest.command == "solve"
    assert manifest.exit_code == EXIT_OK
    assert str(out) in manifest.artifacts
    assert manifest.config["settings"] == Settings().to_dict()
    assert manifest.config["args"]["method"] == "auto"
    assert manifest.seeds == []
    assert any(line.startswith("[OK]") for line in manifest.log)


def test_solve_forest_tree_agrees_with_backtrack(tmp_path):
    rng = np.random.default_rng(5)
    for k in range(8):
        forest = random_forest(rng, 10)
        game = write_game(forest, tmp_path / f"forest{k}.json")
        assert run("solve", game, "--out", tmp_path / "all.txt") == EXIT_OK
        assert run("solve", game, "--method", "tree", "--out", tmp_path / "tree.txt") == EXIT_OK
        everything = read_psne(tmp_path / "all.txt")
        assert sorted(everything) == sorted(brute_force_psne(forest))
        tree = read_psne(tmp_path / "tree.txt")
        assert len(tree) == (1 if everything else 0)
        assert all(x in everything for x in tree)


def test_solve_count_only(tmp_path):
    game = write_game(coordination_pair(), tmp_path / "pair.json")
    out = tmp_path / "count.json"
    assert run("solve", game, "--count-only", "--out", out) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["count"] == 2
    assert data["exact"] is True


def test_solve_first_uses_supermodular_on_nonnegative_games(tmp_path):
    game = write_game(clique(4), tmp_path / "k4.json")
    out = tmp_path / "one.txt"
    assert run("solve", game, "--first", "--out", out) == EXIT_OK
    assert read_psne(out) == [(-1, -1, -1, -1)]
    assert any("supermodular" in line for line in _manifest(out).log)


def test_solve_budget_exhausted_exit_code(tmp_path):
    game = write_game(clique(8), tmp_path / "k8.json")
    out = tmp_path / "psne.txt"
    assert run("solve", game, "--budget", 3, "--out", out) == EXIT_BUDGET
    assert out.exists()
    manifest = _manifest(out)
    assert manifest.exit_code == EXIT_BUDGET
    assert str(out) in manifest.artifacts


def test_solve_validation_exit_codes(tmp_path):
    assert run("solve", tmp_path / "missing.json", "--out", tmp_path / "x.txt") == EXIT_VALIDATION
    assert run("solve") == EXIT_VALIDATION
    assert run("frobnicate") == EXIT_VALIDATION
    game = write_game(clique(3), tmp_path / "k3.json")
    assert run("solve", game, "--method", "tree", "--out", tmp_path / "x.txt") == EXIT_VALIDATION
    assert run("--seed", -4, "solve", game, "--out", tmp_path / "x.txt") == EXIT_VALIDATION


def test_help_exits_cleanly(capsys):
    assert run("--help") == EXIT_OK
    assert "solve" in capsys.readouterr().out


def test_explicit_manifest_path(tmp_path):
    game = write_game(coordination_pair(), tmp_path / "pair.json")
    target = tmp_path / "runs" / "solve.json"
    assert run("--manifest", target, "solve", game, "--out", tmp_path / "psne.txt") == EXIT_OK
    assert read_manifest(target).command == "solve"
    assert not (tmp_path / "psne.txt.manifest.json").exists()


def test_config_file_is_applied(tmp_path):
    (tmp_path / "lig_settings.json").write_text(json.dumps({"tie_epsilon": 0.5}), encoding="utf-8")
    game = write_game(InfluenceGame.from_arcs(1, [], [0.25]), tmp_path / "one.json")
    out = tmp_path / "psne.txt"
    assert run("solve", game, "--out", out) == EXIT_OK
    assert sorted(read_psne(out)) == [(-1,), (1,)]
    assert _manifest(out).config["settings"]["tie_epsilon"] == 0.5

    other = tmp_path / "other.json"
    other.write_text(json.dumps({"tie_epsilon": 0.0}), encoding="utf-8")
    assert run("--config", other, "solve", game, "--out", out) == EXIT_OK
    assert read_psne(out) == [(-1,)]


# -------------------------
# influential / scenario
# -------------------------

def test_influential_infeasible_exit_code(tmp_path):
    pennies = InfluenceGame.from_arcs(2, [(0, 1, 1.0), (1, 0, -1.0)], [0.0, 0.0])
    game = write_game(pennies, tmp_path / "mp.json")
    out = tmp_path / "inf.json"
    assert run("influential", game, "--out", out) == EXIT_INFEASIBLE
    manifest = _manifest(out)
    assert manifest.exit_code == EXIT_INFEASIBLE
    assert any(line.startswith("[ERROR]") for line in manifest.log)


def test_influential_coordination_pair(tmp_path):
    game = write_game(coordination_pair(), tmp_path / "pair.json")
    out = tmp_path / "inf.json"
    assert run("influential", game, "--exact", "--out", out) == EXIT_OK
    result = json.loads(out.read_text(encoding="utf-8"))
    assert result["goal"] == [1, 1]
    assert len(result["selected"]) == 1


def test_scenario_diffusion(tmp_path):
    game = write_game(clique(4), tmp_path / "k4.json")
    out = tmp_path / "rep.json"
    assert run("scenario", game, "--quota", 4, "--mode", "diffusion", "--k-max", 1, "--out", out) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["mode"] == "diffusion"
    assert "hits" in report


# -------------------------
# generate / learn / bench / gadget / transform
# -------------------------

def test_generate_is_deterministic_by_seed(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("--seed", 5, "generate", "--family", "uniform", "-n", 8, "--flip-p", 0.5, "--out", a) == EXIT_OK
    assert run("--seed", 5, "generate", "--family", "uniform", "-n", 8, "--flip-p", 0.5, "--out", b) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert read_game(a).n == 8
    assert _manifest(a).seeds == [5]


def test_generate_rejects_bad_flags(tmp_path):
    assert run("generate", "--family", "erdos", "-n", 0, "--out", tmp_path / "g.json") == EXIT_VALIDATION
    assert run("generate", "--family", "lattice", "-n", 4, "--out", tmp_path / "g.json") == EXIT_VALIDATION


def test_learn_from_votes_csv(tmp_path):
    votes = tmp_path / "votes.csv"
    votes.write_text("a,b\n1,1\n-1,-1\n1,1\n-1,-1\n", encoding="utf-8")
    out = tmp_path / "learned.json"
    report = tmp_path / "report.json"
    assert run("learn", votes, "--lambda", 0.05, "--report", report, "--out", out) == EXIT_OK
    game = read_game(out)
    assert game.labels == ("a", "b")
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["representation_rate"] == pytest.approx(1.0)
    assert data["l2_lambda"] == 0.05


def test_bench_csv_contract(tmp_path):
    out = tmp_path / "prefattach.csv"
    assert run("bench", "prefattach", "--trials", 2, "--values", "5,6", "--out", out) == EXIT_OK
    header, *rows = out.read_text(encoding="utf-8").splitlines()
    columns = header.split(",")
    for name in ("p", "avg_psne", "avg_visits", "ci"):
        assert name in columns
    assert len(rows) == 2
    assert run("bench", "prefattach", "--values", "a,b", "--out", out) == EXIT_VALIDATION


def test_bench_same_seed_same_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run("--seed", 3, "bench", "erdos", "--trials", 2, "--values", 6, "--out", a) == EXIT_OK
    assert run("--seed", 3, "--threads", 2, "bench", "erdos", "--trials", 2, "--values", 6, "--out", b) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_gadget_knapsack(tmp_path):
    src = tmp_path / "knap.json"
    src.write_text(json.dumps({"weights": [1, 2, 3], "capacity": 3}), encoding="utf-8")
    out = tmp_path / "gadget.json"
    assert run("gadget", "knapsack", src, "--out", out) == EXIT_OK
    # feasible subsets: {}, {1}, {2}, {3}, {1,2}
    assert len(brute_force_psne(read_game(out))) == 5


def test_transform_zero_one(tmp_path):
    game = write_game(coordination_pair(), tmp_path / "pair.json")
    out = tmp_path / "pm.json"
    assert run("transform", "zero-one", game, "--out", out) == EXIT_OK
    assert read_game(out).n == 2


def test_transform_potential_follows_settings(tmp_path):
    game = write_game(clique(3), tmp_path / "clique.json")
    out = tmp_path / "potential.json"
    assert run("transform", "potential", game, "--out", out) == EXIT_OK
    assert len(json.loads(out.read_text(encoding="utf-8"))["local_maxima"]) == 2
    assert any(line.endswith("0 warning(s).") for line in _manifest(out).log)

    (tmp_path / "lig_settings.json").write_text(json.dumps({"brute_force_cap": 2}), encoding="utf-8")
    assert run("transform", "potential", game, "--out", out) == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8"))["local_maxima"] is None
    assert any(line.endswith("1 warning(s).") for line in _manifest(out).log)



# -------------------------
# replay
# -------------------------

def test_replay_reproduces_outputs(tmp_path):
    out = tmp_path / "game.json"
    assert run("--seed", 2, "generate", "--family", "prefattach", "-n", 9, "--flip-p", 0.3, "--out", out) == EXIT_OK
    before = out.read_bytes()
    out.unlink()
    assert run("replay", f"{out}.manifest.json") == EXIT_OK
    assert out.read_bytes() == before


def test_replay_reproduces_failures(tmp_path):
    game = write_game(clique(8), tmp_path / "k8.json")
    out = tmp_path / "psne.txt"
    assert run("solve", game, "--budget", 3, "--out", out) == EXIT_BUDGET
    assert run("replay", f"{out}.manifest.json") == EXIT_OK


def test_replay_detects_changed_outputs(tmp_path):
    game = write_game(coordination_pair(), tmp_path / "pair.json")
    out = tmp_path / "psne.txt"
    assert run("solve", game, "--out", out) == EXIT_OK
    path = tmp_path / "psne.txt.manifest.json"
    manifest = read_manifest(path)
    manifest.artifacts[str(out)] = "0" * 64
    write_manifest(manifest, path)
    assert run("replay", path) == EXIT_ERROR


def test_replay_missing_manifest(tmp_path):
    assert run("replay", tmp_path / "nope.json") == EXIT_VALIDATION
