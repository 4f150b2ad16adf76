from __future__ import annotations

from typing import FrozenSet, Sequence

from .constants import MINUS, PLUS
from .models import InfluenceGame
from .validators import validate_joint_action, validate_player

_BOTH = frozenset({MINUS, PLUS})
_ONLY_PLUS = frozenset({PLUS})
_ONLY_MINUS = frozenset({MINUS})


def _influence(game: InfluenceGame, i: int, x: Sequence[int]) -> float:
    # Summation follows in-arc order so every caller sees the same float
    total = 0.0
    for j, w in game.in_arcs(i):
        total += w * x[j]
    return total - game.thresholds[i]


def influence(game: InfluenceGame, i: int, x: Sequence[int]) -> float:
    """f_i(x_{-i}) = sum_{j != i} w_ji x_j - b_i. x_i itself is ignored."""
    validate_player(game, i)
    x = validate_joint_action(game, x)
    return _influence(game, i, x)


def payoff(game: InfluenceGame, i: int, x: Sequence[int]) -> float:
    validate_player(game, i)
    x = validate_joint_action(game, x)
    return x[i] * _influence(game, i, x)


def best_responses(game: InfluenceGame, i: int, x: Sequence[int]) -> FrozenSet[int]:
    f = influence(game, i, x)
    eps = game.tie_epsilon
    if f > eps:
        return _ONLY_PLUS
    if f < -eps:
        return _ONLY_MINUS
    return _BOTH


def is_psne(game: InfluenceGame, x: Sequence[int]) -> bool:
    x = validate_joint_action(game, x)
    eps = game.tie_epsilon
    return all(x[i] * _influence(game, i, x) >= -eps for i in range(game.n))


def unhappy_players(game: InfluenceGame, x: Sequence[int]) -> list:
    """Players whose current action is not a best response."""
    x = validate_joint_action(game, x)
    eps = game.tie_epsilon
    return [i for i in range(game.n) if x[i] * _influence(game, i, x) < -eps]


def influence_vector(game: InfluenceGame, x: Sequence[int]) -> list:
    """All f_i at once, without input validation, for the inner loops of dynamics."""
    return [_influence(game, i, x) for i in range(game.n)]
