from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.game_core import (
    InfeasibleError,
    InfluenceGame,
    JointAction,
    LigError,
    PartialAssignment,
    ValidationError,
    is_psne,
)

from .counting import CountFn, ExtensionCounter, HypergraphCounter
from .models import (
    GREEDY,
    TARGET_PSNE,
    GoalSpec,
    InfluenceResult,
    SetPreference,
    TieDag,
)

LogFn = Callable[[str], None]

DEFAULT_TIE_WIDTH = 16


def _noop(_: str) -> None:
    return


def optimal_psne_set(
    psne: Sequence[JointAction],
    goal: GoalSpec,
    selected: Iterable[int] = (),
) -> List[JointAction]:
    """All maximizers of g(., S) over the PSNE, sorted."""
    if not psne:
        raise ValidationError("The optimal PSNE set is undefined for an empty PSNE list.")
    pool = [tuple(int(a) for a in x) for x in psne]
    goal.check_players(len(pool[0]))
    if goal.variant == TARGET_PSNE and goal.target not in set(pool):
        raise ValidationError("The target joint action is not a PSNE of the game.")
    chosen = frozenset(selected)
    values = [goal.value(x, chosen) for x in pool]
    best = max(values)
    slack = abs(best) * 1e-12
    return sorted(x for x, v in zip(pool, values) if v >= best - slack)


def candidate_positions(goal_x: JointAction, adopters_only: bool = False) -> List[int]:
    if adopters_only:
        return [i for i, a in enumerate(goal_x) if a > 0]
    return list(range(len(goal_x)))


def prescribe(goal_x: JointAction, players: Iterable[int]) -> PartialAssignment:
    return PartialAssignment.from_pairs((i, goal_x[i]) for i in players)


def is_maximal(count_fn: CountFn, goal_x: JointAction, positions: Sequence[int]) -> bool:
    """No other PSNE agrees with the goal on every candidate position."""
    return count_fn(prescribe(goal_x, positions)) == 1


def resolve_counter(
    game: InfluenceGame,
    psne: Optional[Sequence[JointAction]],
    count_fn: Optional[CountFn],
) -> CountFn:
    if count_fn is not None:
        return count_fn
    if psne:
        return HypergraphCounter(psne)
    return ExtensionCounter(game)


def goal_candidates(
    game: InfluenceGame,
    psne: Optional[Sequence[JointAction]],
    goal: GoalSpec,
) -> List[JointAction]:
    """X*_g over the full player set, lexicographic."""
    goal.check_players(game.n)
    if psne is None:
        if goal.variant != TARGET_PSNE:
            raise ValidationError("Without a PSNE list only a target goal can be used.")
        if not is_psne(game, goal.target):
            raise ValidationError("The target joint action is not a PSNE of the game.")
        return [goal.target]
    if not psne:
        raise InfeasibleError("The game has no PSNE, so no set can make a goal unique.")
    return optimal_psne_set(psne, goal, range(game.n))


def count_candidates(
    count_fn: CountFn,
    partial: PartialAssignment,
    goal_x: JointAction,
    candidates: Sequence[int],
    threads: int = 1,
) -> Dict[int, int]:
    jobs = [partial.extend(i, goal_x[i]) for i in candidates]
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(count_fn, jobs))
    else:
        values = [count_fn(p) for p in jobs]
    return dict(zip(candidates, values))


def least_degree(counts: Dict[int, int], pref: SetPreference) -> List[int]:
    """Candidates tied for the fewest consistent PSNE, in tie-break order."""
    low = min(counts.values())
    tied = [i for i, c in counts.items() if c == low]
    top = min(pref.tie_key(i)[0] for i in tied)
    return sorted(i for i in tied if pref.tie_key(i)[0] == top)


def _run(
    count_fn: CountFn,
    goal_x: JointAction,
    positions: Sequence[int],
    pref: SetPreference,
    threads: int,
    log: LogFn,
) -> Tuple[List[int], List[Dict[str, object]]]:
    picked: List[int] = []
    rounds: List[Dict[str, object]] = []
    partial = PartialAssignment()
    current = count_fn(partial)
    while current > 1:
        candidates = [i for i in positions if i not in partial]
        if not candidates:
            raise InfeasibleError("Candidate positions ran out before the goal became unique.")
        counts = count_candidates(count_fn, partial, goal_x, candidates, threads)
        tied = least_degree(counts, pref)
        pick = tied[0]
        left = counts[pick]
        if left >= current:
            raise LigError(f"No candidate reduces the {current} consistent PSNE.")
        partial = partial.extend(pick, goal_x[pick])
        picked.append(pick)
        rounds.append(
            {
                "candidate_counts": {str(i): counts[i] for i in candidates},
                "picked": pick,
                "tied": tied,
                "remaining": left,
            }
        )
        log(f"[GREEDY] round {len(rounds)}: picked {pick} ({len(tied)} tied), {left} consistent PSNE left")
        current = left
    return picked, rounds


def explore_tie_dag(
    count_fn: CountFn,
    goal_x: JointAction,
    positions: Sequence[int],
    pref: Optional[SetPreference] = None,
    *,
    tie_width: int = DEFAULT_TIE_WIDTH,
    threads: int = 1,
) -> TieDag:
    """
    Every greedy run reachable by switching between tied least-degree picks.

    States are selections; a level keeps at most tie_width new states and
    sets `truncated` when it had to drop some.
    """
    if tie_width < 1:
        raise ValidationError(f"tie_width must be >= 1 (got {tie_width}).")
    pref = pref or SetPreference()
    dag = TieDag()
    start = count_fn(PartialAssignment())
    dag.nodes.append({"id": 0, "selected": [], "count": start, "terminal": start == 1})
    index: Dict[FrozenSet[int], int] = {frozenset(): 0}
    level = [frozenset()] if start > 1 else []

    while level:
        nxt: List[FrozenSet[int]] = []
        for state in level:
            partial = prescribe(goal_x, sorted(state))
            candidates = [i for i in positions if i not in state]
            if not candidates:
                continue
            counts = count_candidates(count_fn, partial, goal_x, candidates, threads)
            for i in least_degree(counts, pref):
                child = state | {i}
                if child not in index:
                    if len(nxt) >= tie_width:
                        dag.truncated = True
                        continue
                    index[child] = len(dag.nodes)
                    c = counts[i]
                    dag.nodes.append({"id": index[child], "selected": sorted(child), "count": c, "terminal": c == 1})
                    if c > 1:
                        nxt.append(child)
                dag.edges.append((index[state], index[child], i))
        level = nxt
    return dag


def greedy_most_influential(
    game: InfluenceGame,
    psne: Optional[Sequence[JointAction]],
    goal: GoalSpec,
    pref: Optional[SetPreference] = None,
    count_fn: Optional[CountFn] = None,
    *,
    adopters_only: bool = False,
    explore_ties: bool = False,
    tie_width: int = DEFAULT_TIE_WIDTH,
    threads: int = 1,
    log_fn: Optional[LogFn] = None,
) -> InfluenceResult:
    """
    Least-degree greedy for the unique-hyperedge problem.

    Each round prescribes the goal action to the candidate that leaves the
    fewest consistent PSNE; it stops once the goal is the only one left.
    Goals from X*_g are tried in lexicographic order; a goal some other PSNE
    dominates on the candidate positions is skipped up front.
    """
    log = log_fn or _noop
    pref = pref or SetPreference()
    pref.check_players(game.n)
    goals = goal_candidates(game, psne, goal)
    counter = resolve_counter(game, psne, count_fn)

    for x in goals:
        positions = candidate_positions(x, adopters_only)
        if not is_maximal(counter, x, positions):
            log(f"[WARN] Goal {list(x)} is dominated on its candidate positions; skipping.")
            continue
        picked, rounds = _run(counter, x, positions, pref, threads, log)
        chosen = tuple(sorted(picked))
        if goal.depends_on_set and psne is not None and x not in optimal_psne_set(psne, goal, chosen):
            log(f"[WARN] Goal {list(x)} is not optimal for the selected set {list(chosen)}; skipping.")
            continue
        dag = None
        if explore_ties:
            dag = explore_tie_dag(counter, x, positions, pref, tie_width=tie_width, threads=threads)
        log(f"[OK] Greedy selected {len(chosen)} player(s): {list(chosen)}")
        return InfluenceResult(chosen, tuple(x[i] for i in chosen), x, 1, GREEDY, rounds, dag)

    raise InfeasibleError("No goal PSNE can be made the unique consistent outcome.", best=goals)
