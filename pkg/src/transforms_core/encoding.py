from __future__ import annotations

from typing import Sequence, Tuple

from src.game_core import InfluenceGame, ValidationError


def zero_one_to_pm1(game01: InfluenceGame) -> InfluenceGame:
    """
    Re-encode a {0,1}-action game as a {-1,+1} game with the same equilibria.

    w'_ji = w_ji / 2 and b'_i = b_i - sum_j w_ji / 2, so that x' = 2x - 1
    sees the same influence values as x.
    """
    arcs = [(j, i, w / 2.0) for j, i, w in game01.arcs]
    thresholds = [
        b - sum(w for _, w in game01.in_arcs(i)) / 2.0 for i, b in enumerate(game01.thresholds)
    ]
    return InfluenceGame.from_arcs(
        game01.n, arcs, thresholds, labels=game01.labels, tie_epsilon=game01.tie_epsilon
    )


def to_pm1_actions(x01: Sequence[int]) -> Tuple[int, ...]:
    for a in x01:
        if a not in (0, 1):
            raise ValidationError(f"A {{0,1}} action must be 0 or 1 (got {a}).")
    return tuple(2 * int(a) - 1 for a in x01)


def to_zero_one_actions(x: Sequence[int]) -> Tuple[int, ...]:
    return tuple((int(a) + 1) // 2 for a in x)


def is_psne_zero_one(game01: InfluenceGame, x01: Sequence[int]) -> bool:
    """x_i = 1 needs f_i >= 0 and x_i = 0 needs f_i <= 0, with f_i = sum_j w_ji x_j - b_i."""
    if len(x01) != game01.n:
        raise ValidationError(f"Joint action has length {len(x01)}, expected {game01.n}.")
    eps = game01.tie_epsilon
    for i in range(game01.n):
        f = sum(w * x01[j] for j, w in game01.in_arcs(i)) - game01.thresholds[i]
        if x01[i] == 1 and f < -eps:
            return False
        if x01[i] == 0 and f > eps:
            return False
    return True
