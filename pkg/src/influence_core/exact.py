from __future__ import annotations

import heapq
import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from src.game_core import DEFAULT_BRUTE_FORCE_CAP, InfeasibleError, InfluenceGame, JointAction
from src.game_core.validators import validate_cap

from .counting import CountFn
from .greedy import (
    candidate_positions,
    goal_candidates,
    is_maximal,
    optimal_psne_set,
    prescribe,
    resolve_counter,
)
from .models import EXACT, MIN_CARDINALITY, GoalSpec, InfluenceResult, SetPreference

LogFn = Callable[[str], None]


def _noop(_: str) -> None:
    return


class _Feasibility:
    def __init__(
        self,
        psne: Optional[Sequence[JointAction]],
        goal: GoalSpec,
        fixed_goals: List[JointAction],
        count_fn: CountFn,
        adopters_only: bool,
    ):
        self.psne = psne
        self.goal = goal
        self.fixed_goals = fixed_goals
        self.count_fn = count_fn
        self.adopters_only = adopters_only

    def __call__(self, selected: Tuple[int, ...]) -> Optional[JointAction]:
        """The first goal PSNE that `selected` makes unique, or None."""
        if self.goal.depends_on_set and self.psne is not None:
            goals = optimal_psne_set(self.psne, self.goal, selected)
        else:
            goals = self.fixed_goals
        for x in goals:
            if self.adopters_only and any(x[i] < 0 for i in selected):
                continue
            if self.count_fn(prescribe(x, selected)) == 1:
                return x
        return None


def _by_cardinality(n: int, max_size: int) -> Iterator[List[Tuple[int, ...]]]:
    for k in range(max_size + 1):
        yield list(itertools.combinations(range(n), k))


def _by_weight(weights: Sequence[float], max_size: int) -> Iterator[List[Tuple[int, ...]]]:
    """
    Sets in non-increasing h, one batch per h value.

    The best set takes every positive-weight player; any other set differs
    from it by a flip set whose cost is the sum of |v_i| flipped. Flip sets
    come out of a heap in non-decreasing cost, expanding over players
    sorted by |v_i|.
    """
    n = len(weights)
    base = frozenset(i for i, v in enumerate(weights) if v > 0)
    order = sorted(range(n), key=lambda i: (abs(weights[i]), i))
    costs = [abs(weights[i]) for i in order]

    def cost_of(picks: Tuple[int, ...]) -> float:
        return sum(costs[k] for k in picks)

    heap: List[Tuple[float, Tuple[int, ...]]] = [(0.0, ())]
    batch: List[Tuple[int, ...]] = []
    batch_cost: Optional[float] = None
    while heap:
        cost, picks = heapq.heappop(heap)
        last = picks[-1] if picks else -1
        if last + 1 < n:
            grown = picks + (last + 1,)
            heapq.heappush(heap, (cost_of(grown), grown))
            if picks:
                moved = picks[:-1] + (last + 1,)
                heapq.heappush(heap, (cost_of(moved), moved))
        if batch_cost is None:
            batch_cost = cost
        elif cost > batch_cost + 1e-12 * max(1.0, batch_cost):
            if batch:
                yield sorted(batch)
            batch = []
            batch_cost = cost
        selected = tuple(sorted(base ^ frozenset(order[k] for k in picks)))
        if len(selected) <= max_size:
            batch.append(selected)
    if batch:
        yield sorted(batch)


def exact_most_influential(
    game: InfluenceGame,
    psne: Optional[Sequence[JointAction]],
    goal: GoalSpec,
    pref: Optional[SetPreference] = None,
    count_fn: Optional[CountFn] = None,
    *,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
    max_size: Optional[int] = None,
    adopters_only: bool = False,
    threads: int = 1,
    log_fn: Optional[LogFn] = None,
) -> InfluenceResult:
    """
    h-optimal feasible set by sweeping subsets in preference order.

    Min-cardinality sweeps sizes 0, 1, 2, ... (lexicographic within a size);
    weighted preferences sweep batches of equal h. Within a batch the
    lexicographically first feasible set wins.
    """
    log = log_fn or _noop
    pref = pref or SetPreference()
    pref.check_players(game.n)
    validate_cap(game.n, cap, "exact most-influential sweep")
    limit = game.n if max_size is None else min(game.n, int(max_size))

    fixed = goal_candidates(game, psne, goal)
    counter = resolve_counter(game, psne, count_fn)
    if not goal.depends_on_set:
        fixed = [x for x in fixed if is_maximal(counter, x, candidate_positions(x, adopters_only))]
        if not fixed:
            raise InfeasibleError("Every goal PSNE is dominated on its candidate positions.")
    feasible = _Feasibility(psne, goal, fixed, counter, adopters_only)

    batches = _by_cardinality(game.n, limit) if pref.variant == MIN_CARDINALITY else _by_weight(pref.weights, limit)
    checked = 0
    for batch in batches:
        if threads > 1 and len(batch) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                hits = list(pool.map(feasible, batch))
        else:
            hits = []
            for s in batch:
                hits.append(feasible(s))
                if hits[-1] is not None:
                    break
        checked += len(hits)
        for s, x in zip(batch, hits):
            if x is not None:
                log(f"[OK] Exact search found {list(s)} after checking {checked} set(s).")
                return InfluenceResult(s, tuple(x[i] for i in s), x, 1, EXACT)

    raise InfeasibleError(f"No feasible set among {checked} checked.", best=fixed)


def is_feasible_set(
    goal_x: JointAction,
    selected: Sequence[int],
    count_fn: CountFn,
) -> bool:
    """Exactly one PSNE agrees with the goal on the selected players."""
    return count_fn(prescribe(goal_x, selected)) == 1


def feasible_sets_of_size(
    n: int,
    goal_x: JointAction,
    size: int,
    count_fn: CountFn,
) -> List[FrozenSet[int]]:
    return [
        frozenset(s)
        for s in itertools.combinations(range(n), size)
        if is_feasible_set(goal_x, s, count_fn)
    ]
