"""Shipped game fixtures: the nine-justice Supreme Court game."""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Tuple

from .game_io import read_game
from .models import InfluenceGame

DATA_DIR = Path(__file__).parent / "data"
SUPREME_COURT_TABLE = DATA_DIR / "supreme_court_table.json"
SUPREME_COURT_GAME = DATA_DIR / "supreme_court_game.json"

CONSERVATIVE_BLOC = ("Scalia", "Thomas", "Rehnquist", "O'Connor", "Kennedy")
LIBERAL_BLOC = ("Breyer", "Souter", "Ginsburg", "Stevens")


def read_supreme_court_table() -> Tuple[List[str], List[List[float]]]:
    data = json.loads(SUPREME_COURT_TABLE.read_text(encoding="utf-8"))
    return list(data["labels"]), [list(map(float, row)) for row in data["matrix"]]


def supreme_court_from_table() -> InfluenceGame:
    """Build the game from the raw table (row = receiver, diagonal = threshold)."""
    labels, table = read_supreme_court_table()
    n = len(labels)
    arcs = [(j, i, table[i][j]) for j in range(n) for i in range(n) if i != j]
    thresholds = [table[i][i] for i in range(n)]
    return InfluenceGame.from_arcs(n, arcs, thresholds, labels=labels)


def load_supreme_court() -> InfluenceGame:
    return read_game(SUPREME_COURT_GAME)


def five_four_outcome(game: InfluenceGame) -> Tuple[int, ...]:
    """Conservative bloc plus Kennedy at +1, the rest at -1."""
    return tuple(1 if game.label(i) in CONSERVATIVE_BLOC else -1 for i in range(game.n))
