from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Union

from .errors import ValidationError
from .models import InfluenceGame


def game_to_dict(game: InfluenceGame) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "n": game.n,
        "labels": list(game.labels),
        "thresholds": list(game.thresholds),
        "arcs": [[j, i, w] for j, i, w in game.arcs],
    }
    if game.tie_epsilon:
        data["tie_epsilon"] = game.tie_epsilon
    return data


def game_from_dict(data: Dict[str, Any]) -> InfluenceGame:
    try:
        n = int(data["n"])
        thresholds = [float(b) for b in data["thresholds"]]
        arcs = [(int(a[0]), int(a[1]), float(a[2])) for a in data.get("arcs", [])]
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise ValidationError(f"Malformed game document: {e}") from e
    for j, i, w in arcs:
        if j == i and w != 0.0:
            raise ValidationError(f"Self-arc on player {i} with nonzero weight {w}.")
    return InfluenceGame(
        n=n,
        arcs=tuple(arcs),
        thresholds=tuple(thresholds),
        labels=tuple(data.get("labels") or ()),
        tie_epsilon=float(data.get("tie_epsilon", 0.0)),
    )


def dumps_game(game: InfluenceGame) -> str:
    return json.dumps(game_to_dict(game), indent=2) + "\n"


def read_game(path: Union[str, Path]) -> InfluenceGame:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise ValidationError(f"Game file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"Game file is not valid JSON ({path}): {e}") from e
    return game_from_dict(data)


def write_game(game: InfluenceGame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_game(game), encoding="utf-8")
    return path
