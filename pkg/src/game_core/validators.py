from __future__ import annotations

from typing import Sequence

from .constants import ACTIONS
from .errors import CapExceededError, ValidationError
from .models import InfluenceGame, JointAction, PartialAssignment


def validate_player(game: InfluenceGame, i: int) -> None:
    if not (0 <= int(i) < game.n):
        raise ValidationError(f"Player index {i} out of range 0..{game.n - 1}.")


def validate_joint_action(game: InfluenceGame, x: Sequence[int]) -> JointAction:
    if len(x) != game.n:
        raise ValidationError(f"Joint action has length {len(x)}, expected {game.n}.")
    out = tuple(int(a) for a in x)
    for i, a in enumerate(out):
        if a not in ACTIONS:
            raise ValidationError(f"Action of player {i} must be -1 or +1 (got {x[i]}).")
    return out


def validate_partial(game: InfluenceGame, partial: PartialAssignment) -> None:
    for i, _ in partial.items():
        validate_player(game, i)


def validate_cap(n: int, cap: int, what: str = "brute force") -> None:
    if n > cap:
        raise CapExceededError(f"{what} over {n} players exceeds the cap of {cap}.")


def validate_probability(name: str, p: float) -> None:
    if not (0.0 <= float(p) <= 1.0):
        raise ValidationError(f"{name} must lie in [0, 1] (got {p}).")


def validate_epsilon(epsilon: float) -> None:
    if not (0.0 < float(epsilon) < 1.0):
        raise ValidationError(f"epsilon must lie strictly between 0 and 1 (got {epsilon}).")
