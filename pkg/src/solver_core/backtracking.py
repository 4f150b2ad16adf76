from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

from src.game_core import (
    BudgetExhaustedError,
    InfluenceGame,
    JointAction,
    PartialAssignment,
    is_psne,
)
from src.game_core.constants import DOM_BOTH, DOM_MINUS, DOM_PLUS
from src.game_core.validators import validate_partial

from .models import SearchConfig, SearchStats
from .propagation import influence_bounds, propagate_masks, undo
from .stats_store import StatsStore, VisitBudget

LogFn = Callable[[str], None]


def _noop(_: str) -> None:
    return


def selection_order(game: InfluenceGame) -> List[int]:
    """
    Static branching order.

    First the node with the largest out-degree, then repeatedly the unselected
    node with the heaviest single arc |w| into the selected set. A node with no
    arc into the selected set falls back to out-degree. Ties go to the lowest index.
    """
    n = game.n
    selected = [False] * n
    pull = [0.0] * n
    order: List[int] = []

    def by_outdegree() -> int:
        return max((v for v in range(n) if not selected[v]), key=lambda v: (game.out_degree(v), -v))

    while len(order) < n:
        best, best_pull = -1, 0.0
        for v in range(n):
            if not selected[v] and pull[v] > best_pull:
                best, best_pull = v, pull[v]
        v = best if best >= 0 else by_outdegree()
        selected[v] = True
        order.append(v)
        for u, w in game.in_arcs(v):
            if not selected[u] and abs(w) > pull[u]:
                pull[u] = abs(w)
    return order


class _Search:
    def __init__(self, game: InfluenceGame, cfg: SearchConfig, budget: VisitBudget):
        self.game = game
        self.cfg = cfg
        self.eps = game.tie_epsilon
        self.budget = budget
        self.order = selection_order(game)

        full = [DOM_BOTH] * game.n
        self.plus_first = [influence_bounds(game, v, full)[0] > self.eps for v in range(game.n)]

    def branches(self, v: int, mask: int) -> Tuple[int, ...]:
        vals = (DOM_PLUS, DOM_MINUS) if self.plus_first[v] else (DOM_MINUS, DOM_PLUS)
        return tuple(m for m in vals if mask & m)

    def consistent_without_propagation(self, v: int, masks: List[int]) -> bool:
        # gamma test on v and on the assigned nodes v influences
        for j in (v, *(k for k, _ in self.game.out_arcs(v))):
            m = masks[j]
            if m == DOM_BOTH:
                continue
            lo, hi = influence_bounds(self.game, j, masks)
            if m == DOM_PLUS and hi < -self.eps:
                return False
            if m == DOM_MINUS and lo > self.eps:
                return False
        return True

    def assign(self, v: int, value: int, masks: List[int], trail: list) -> bool:
        trail.append((v, masks[v]))
        masks[v] = value
        if self.cfg.use_propagation:
            return propagate_masks(self.game, masks, [k for k, _ in self.game.out_arcs(v)], trail)
        return self.consistent_without_propagation(v, masks)

    def run(self, masks: List[int], depth: int, stats: SearchStats, found: List[JointAction]) -> None:
        if depth == len(self.order):
            x = tuple(1 if m == DOM_PLUS else -1 for m in masks)
            if is_psne(self.game, x):
                stats.psne_found += 1
                if not self.cfg.count_only:
                    found.append(x)
                if self.cfg.limit is not None and stats.psne_found >= self.cfg.limit:
                    raise _Enough()
            return

        v = self.order[depth]
        trail: list = []
        for value in self.branches(v, masks[v]):
            if not self.budget.take():
                raise _OutOfBudget()
            stats.nodes_visited += 1
            if self.assign(v, value, masks, trail):
                self.run(masks, depth + 1, stats, found)
            undo(masks, trail, 0)

    def expand(self, masks: List[int], depth: int, stats: SearchStats, want: int) -> List[Tuple[List[int], int]]:
        """Split the top of the tree into independent subproblems for worker threads."""
        frontier = [(masks, depth)]
        while len(frontier) < want:
            nxt = []
            grew = False
            for m, d in frontier:
                if d == len(self.order):
                    nxt.append((m, d))
                    continue
                v = self.order[d]
                for value in self.branches(v, m[v]):
                    if not self.budget.take():
                        raise _OutOfBudget()
                    stats.nodes_visited += 1
                    child = list(m)
                    if self.assign(v, value, child, []):
                        nxt.append((child, d + 1))
                grew = True
            frontier = nxt
            if not grew or not frontier:
                break
        return frontier


class _OutOfBudget(Exception):
    pass


class _Enough(Exception):
    pass


def _start_masks(
    game: InfluenceGame,
    partial: Optional[PartialAssignment],
    use_propagation: bool,
) -> Optional[List[int]]:
    masks = [DOM_BOTH] * game.n
    if partial is not None:
        validate_partial(game, partial)
        for i, a in partial.items():
            masks[i] = DOM_PLUS if a > 0 else DOM_MINUS
    if use_propagation and not propagate_masks(game, masks, range(game.n)):
        return None
    return masks


def _search(
    game: InfluenceGame,
    cfg: SearchConfig,
    partial: Optional[PartialAssignment],
    log_fn: LogFn,
) -> Tuple[List[JointAction], SearchStats]:
    started = time.perf_counter()
    budget = VisitBudget(cfg.max_nodes)
    search = _Search(game, cfg, budget)
    stats = SearchStats()
    found: List[JointAction] = []

    masks = _start_masks(game, partial, cfg.use_propagation)

    try:
        if masks is not None:
            if cfg.parallel and cfg.threads > 1 and cfg.limit is None:
                parts = search.expand(masks, 0, stats, want=cfg.threads * 4)
                store = StatsStore(SearchStats(nodes_visited=stats.nodes_visited))

                def work(item: Tuple[List[int], int]) -> List[JointAction]:
                    local = SearchStats()
                    out: List[JointAction] = []
                    try:
                        search.run(item[0], item[1], local, out)
                    finally:
                        store.add(local)
                    return out

                try:
                    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                        for out in pool.map(work, parts):
                            found.extend(out)
                finally:
                    merged = store.snapshot()
                    stats.nodes_visited, stats.psne_found = merged.nodes_visited, merged.psne_found
            else:
                try:
                    search.run(masks, 0, stats, found)
                except _Enough:
                    log_fn(f"[SEARCH] Stopped after {stats.psne_found} PSNE (limit {cfg.limit}).")
    except _OutOfBudget:
        stats.wall_time = time.perf_counter() - started
        found.sort()
        log_fn(f"[WARN] Search budget of {cfg.max_nodes} nodes exhausted after {stats.psne_found} PSNE.")
        raise BudgetExhaustedError(
            f"Search budget of {cfg.max_nodes} nodes exhausted.", partial=found, stats=stats
        ) from None

    found.sort()
    stats.wall_time = time.perf_counter() - started
    log_fn(f"[SEARCH] {stats.psne_found} PSNE, {stats.nodes_visited} node visits, n={game.n}")
    return found, stats


def enumerate_psne(
    game: InfluenceGame,
    cfg: Optional[SearchConfig] = None,
    *,
    partial: Optional[PartialAssignment] = None,
    log_fn: Optional[LogFn] = None,
) -> Tuple[List[JointAction], SearchStats]:
    """
    Every PSNE in lexicographic order, by backtracking over a static node order.

    With cfg.count_only the list is empty and stats.psne_found carries the count.
    With cfg.limit the search stops at that many PSNE, taken in search order
    rather than lexicographic order, and the list holds only those.
    """
    return _search(game, cfg or SearchConfig(), partial, log_fn or _noop)


def count_psne_extensions(
    game: InfluenceGame,
    partial: PartialAssignment,
    cfg: Optional[SearchConfig] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> int:
    cfg = cfg or SearchConfig()
    counting = SearchConfig(
        max_nodes=cfg.max_nodes,
        parallel=cfg.parallel,
        count_only=True,
        collect_stats=cfg.collect_stats,
        use_propagation=cfg.use_propagation,
        threads=cfg.threads,
        limit=cfg.limit,
    )
    _, stats = _search(game, counting, partial, log_fn or _noop)
    return stats.psne_found

