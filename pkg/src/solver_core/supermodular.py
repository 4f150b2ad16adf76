from __future__ import annotations

from typing import Callable, Optional, Tuple

from src.game_core import InfluenceGame, JointAction, LigError, NotApplicableError, ValidationError, is_psne
from src.game_core.payoffs import influence_vector

from .models import ALL_MINUS_ONE, ALL_PLUS_ONE


def _noop(_: str) -> None:
    return


def solve_supermodular(
    game: InfluenceGame,
    start: int = ALL_MINUS_ONE,
    *,
    log_fn: Optional[Callable[[str], None]] = None,
) -> JointAction:
    """
    Synchronous best-response dynamics from an extreme profile.

    With nonnegative weights the sequence is monotone, so it settles within
    n rounds. Indifferent players stay at the start value.
    """
    if start not in (ALL_MINUS_ONE, ALL_PLUS_ONE):
        raise ValidationError(f"start must be -1 or +1 (got {start}).")
    if not game.all_nonnegative():
        raise NotApplicableError("The supermodular method needs every weight to be nonnegative.")

    log = log_fn or _noop
    eps = game.tie_epsilon
    x = [start] * game.n
    for rounds in range(game.n + 1):
        f = influence_vector(game, x)
        nxt = [1 if fi > eps else -1 if fi < -eps else start for fi in f]
        if nxt == x:
            result = tuple(x)
            if not is_psne(game, result):
                raise LigError("Best-response fixed point failed the PSNE check.")
            log(f"[SEARCH] Supermodular dynamics from {start:+d} settled after {rounds} rounds.")
            return result
        x = nxt
    raise LigError(f"Best-response dynamics did not settle within {game.n} rounds.")


def supermodular_extremes(game: InfluenceGame, **kwargs) -> Tuple[JointAction, JointAction]:
    """Lowest and highest PSNE; every PSNE lies between them componentwise."""
    return solve_supermodular(game, ALL_MINUS_ONE, **kwargs), solve_supermodular(game, ALL_PLUS_ONE, **kwargs)
