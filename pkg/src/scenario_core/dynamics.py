from __future__ import annotations

from typing import Callable, Dict, Mapping, Optional, Sequence

from src.game_core import BudgetExhaustedError, InfluenceGame, JointAction, ValidationError, is_psne
from src.game_core.payoffs import influence_vector
from src.game_core.validators import validate_joint_action, validate_player

from .models import CYCLE, DEFAULT_ROUND_FACTOR, FIXED_POINT, DynamicsOutcome

LogFn = Callable[[str], None]


def _noop(_: str) -> None:
    return


def step(game: InfluenceGame, x: Sequence[int], forced: Mapping[int, int]) -> JointAction:
    """One synchronous round; indifferent players keep their action."""
    eps = game.tie_epsilon
    f = influence_vector(game, x)
    nxt = []
    for i, (a, fi) in enumerate(zip(x, f)):
        if i in forced:
            nxt.append(forced[i])
        elif fi > eps:
            nxt.append(1)
        elif fi < -eps:
            nxt.append(-1)
        else:
            nxt.append(a)
    return tuple(nxt)


def best_response_dynamics(
    game: InfluenceGame,
    forced: Optional[Mapping[int, int]] = None,
    init: Optional[Sequence[int]] = None,
    max_rounds: Optional[int] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> DynamicsOutcome:
    """
    Synchronous best-response dynamics with some players pinned.

    Stops at a fixed point, or at the first state seen twice (a cycle).
    A fixed point is stable when it is a PSNE of the game, forced players
    included. max_rounds defaults to 4n.
    """
    log = log_fn or _noop
    forced = {int(i): int(a) for i, a in (forced or {}).items()}
    for i, a in forced.items():
        validate_player(game, i)
        if a not in (-1, 1):
            raise ValidationError(f"Forced action of player {i} must be -1 or +1 (got {a}).")
    x = validate_joint_action(game, init) if init is not None else tuple(-1 for _ in range(game.n))
    for i, a in forced.items():
        if x[i] != a:
            raise ValidationError(f"Player {i} is forced to {a:+d} but starts at {x[i]:+d}.")
    limit = DEFAULT_ROUND_FACTOR * max(game.n, 1) if max_rounds is None else int(max_rounds)
    if limit < 0:
        raise ValidationError(f"max_rounds must be >= 0 (got {max_rounds}).")

    seen: Dict[JointAction, int] = {x: 0}
    for t in range(limit + 1):
        nxt = step(game, x, forced)
        if nxt == x:
            return DynamicsOutcome(FIXED_POINT, x, rounds=t, stable=is_psne(game, x))
        if nxt in seen:
            log(f"[DYN] Cycle of period {t + 1 - seen[nxt]} detected at round {t + 1}.")
            return DynamicsOutcome(CYCLE, nxt, period=t + 1 - seen[nxt], first_repeat_round=t + 1)
        if t == limit:
            break
        seen[nxt] = t + 1
        x = nxt

    log(f"[WARN] Best-response dynamics still moving after {limit} rounds.")
    raise BudgetExhaustedError(f"Dynamics did not settle within {limit} rounds.", partial=[x])
