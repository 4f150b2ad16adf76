"""
Diffusion-style heuristics: force players to +1 and let best-response
dynamics spread the action. They ignore whether forced players actually
want to play +1, which is what separates them from the PSNE-based
coalition search.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.game_core import (
    BudgetExhaustedError,
    CapExceededError,
    InfeasibleError,
    InfluenceGame,
    JointAction,
    ValidationError,
)

from .cloture import meets_cloture
from .dynamics import best_response_dynamics
from .models import DEFAULT_MAX_SUBSETS, ClotureSpec, DiffusionHit, DiffusionResult, DynamicsOutcome

LogFn = Callable[[str], None]


def _noop(_: str) -> None:
    return


def _with_forced(x: Sequence[int], forced: Sequence[int]) -> JointAction:
    out = list(x)
    for i in forced:
        out[i] = 1
    return tuple(out)


def _run(game: InfluenceGame, forced: Sequence[int], start: Sequence[int], max_rounds: Optional[int]) -> Optional[DynamicsOutcome]:
    try:
        return best_response_dynamics(game, {i: 1 for i in forced}, _with_forced(start, forced), max_rounds)
    except BudgetExhaustedError:
        return None


def initial_state(game: InfluenceGame, max_rounds: Optional[int] = None) -> JointAction:
    """All -1 evolved by unforced dynamics; all -1 itself when that does not settle."""
    out = _run(game, (), (-1,) * game.n, max_rounds)
    if out is None or not out.is_fixed_point:
        return (-1,) * game.n
    return out.state


def _score(out: Optional[DynamicsOutcome]) -> float:
    if out is None or not out.is_fixed_point:
        return -math.inf
    return float(out.adopters())


def diffusion_most_influential(
    game: InfluenceGame,
    *,
    max_rounds: Optional[int] = None,
    threads: int = 1,
    log_fn: Optional[LogFn] = None,
) -> DiffusionResult:
    """
    Greedy maximum spread of +1.

    Each round forces one more player (the one whose forcing, on top of the
    earlier picks, ends at the fixed point with the most +1s) and restarts
    from the current state. Stops once everybody plays +1, then drops picks
    that are not needed to reach all +1 from the initial state.
    """
    log = log_fn or _noop
    n = game.n
    start = initial_state(game, max_rounds)
    state = start
    selected: List[int] = []
    rounds: List[Dict[str, object]] = []
    goal = (1,) * n

    while state != goal:
        candidates = [i for i in range(n) if i not in selected]
        if not candidates:
            break
        jobs = [selected + [c] for c in candidates]
        if threads > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                outs = list(pool.map(lambda f: _run(game, f, state, max_rounds), jobs))
        else:
            outs = [_run(game, f, state, max_rounds) for f in jobs]
        scores = [_score(o) for o in outs]
        best = max(scores)
        if best == -math.inf:
            spread = sum(1 for a in state if a > 0)
            raise InfeasibleError(
                f"Every candidate cycles or runs out of rounds; best spread so far is {spread} of {n}.",
                best={"selected": list(selected), "state": list(state)},
            )
        k = scores.index(best)
        pick = candidates[k]
        selected.append(pick)
        state = outs[k].state  # type: ignore[union-attr]
        rounds.append(
            {
                "scores": {str(c): (None if s == -math.inf else int(s)) for c, s in zip(candidates, scores)},
                "picked": pick,
                "spread": int(best),
            }
        )
        log(f"[DYN] Diffusion round {len(rounds)}: forced {pick}, spread {int(best)} of {n}")

    dropped: List[int] = []
    for v in reversed(list(selected)):
        rest = [u for u in selected if u != v]
        out = _run(game, rest, start, max_rounds)
        if out is not None and out.is_fixed_point and out.state == goal:
            selected = rest
            dropped.append(v)

    return DiffusionResult(selected, state, rounds, dropped)


def diffusion_filibuster(
    game: InfluenceGame,
    spec: ClotureSpec,
    k_max: int,
    *,
    max_rounds: Optional[int] = None,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    threads: int = 1,
    log_fn: Optional[LogFn] = None,
) -> List[DiffusionHit]:
    """
    Force every k-subset to +1 with everybody else starting at -1.

    Records the subsets whose fixed point meets the cloture spec, flagged
    stable when the fixed point is a PSNE (forced players included). Stops
    after the first k with a stable hit.
    """
    log = log_fn or _noop
    if k_max < 1:
        raise ValidationError(f"k_max must be >= 1 (got {k_max}).")
    spec.check_players(game.n)
    hits: List[DiffusionHit] = []
    if spec.quota > game.n:
        log(f"[DYN] Quota {spec.quota} exceeds {game.n} players; nothing to sweep.")
        return hits

    k_top = min(int(k_max), game.n)
    total = sum(math.comb(game.n, k) for k in range(1, k_top + 1))
    if total > max_subsets:
        raise CapExceededError(f"Sweeping {total} subsets exceeds the budget of {max_subsets}.")

    start = (-1,) * game.n
    for k in range(1, k_top + 1):
        subsets: List[Tuple[int, ...]] = list(itertools.combinations(range(game.n), k))
        if threads > 1 and len(subsets) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                outs = list(pool.map(lambda s: _run(game, s, start, max_rounds), subsets))
        else:
            outs = [_run(game, s, start, max_rounds) for s in subsets]
        stable_here = 0
        for s, out in zip(subsets, outs):
            if out is None or not out.is_fixed_point or not meets_cloture(out.state, spec):
                continue
            hits.append(DiffusionHit(s, out, out.stable))
            stable_here += out.stable
        log(f"[DYN] k={k}: {sum(len(h.forced) == k for h in hits)} hit(s), {stable_here} stable")
        if stable_here:
            break
    return hits
