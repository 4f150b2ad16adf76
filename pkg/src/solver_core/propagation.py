from __future__ import annotations

from collections import deque
from typing import Deque, Iterable, List, Optional, Tuple

from src.game_core import DomainVector, InfluenceGame, ValidationError
from src.game_core.constants import DOM_BOTH, DOM_MINUS, DOM_PLUS

Trail = List[Tuple[int, int]]  # (player, previous mask)


def influence_bounds(game: InfluenceGame, i: int, masks: List[int]) -> Tuple[float, float]:
    """
    Interval [I_min, I_max] of f_i over the joint actions the domains allow.

    Recomputed from the in-arcs in a fixed order on every call so that a
    singleton assignment reproduces the exact float of payoffs.influence.
    """
    lo = 0.0
    hi = 0.0
    for j, w in game.in_arcs(i):
        m = masks[j]
        if m == DOM_BOTH:
            lo -= abs(w)
            hi += abs(w)
        elif m == DOM_PLUS:
            lo += w
            hi += w
        else:
            lo -= w
            hi -= w
    b = game.thresholds[i]
    return lo - b, hi - b


def _narrow(game: InfluenceGame, i: int, masks: List[int]) -> int:
    eps = game.tie_epsilon
    lo, hi = influence_bounds(game, i, masks)
    m = masks[i]
    if hi < -eps:
        m &= ~DOM_PLUS
    if lo > eps:
        m &= ~DOM_MINUS
    return m


def propagate_masks(
    game: InfluenceGame,
    masks: List[int],
    seeds: Iterable[int],
    trail: Optional[Trail] = None,
) -> bool:
    """
    Run the bound rule to a fixpoint starting from `seeds`, editing `masks` in place.

    Every change is pushed onto `trail` for undo. Returns False on contradiction.
    """
    queue: Deque[int] = deque(seeds)
    queued = set(queue)
    while queue:
        i = queue.popleft()
        queued.discard(i)
        old = masks[i]
        new = _narrow(game, i, masks)
        if new == old:
            continue
        if trail is not None:
            trail.append((i, old))
        masks[i] = new
        if new == 0:
            return False
        for k, _ in game.out_arcs(i):
            if k not in queued:
                queue.append(k)
                queued.add(k)
    return True


def undo(masks: List[int], trail: Trail, mark: int) -> None:
    while len(trail) > mark:
        i, old = trail.pop()
        masks[i] = old


def propagate(game: InfluenceGame, domains: DomainVector) -> DomainVector:
    """Fixpoint of the interval rule; never removes an action used by a consistent PSNE."""
    if len(domains) != game.n:
        raise ValidationError(f"Domain vector has length {len(domains)}, expected {game.n}.")
    if domains.contradiction:
        return domains
    masks = domains.masks()
    if not propagate_masks(game, masks, range(game.n)):
        return DomainVector.contradicted(game.n)
    return DomainVector.from_masks(masks)
