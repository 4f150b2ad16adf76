from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from src.game_core import InfluenceGame, JointAction, is_psne

from .backtracking import enumerate_psne
from .graphs import undirected_graph
from .models import SearchConfig, SearchStats
from .separator import separator_of_graph
from .stats_store import StatsStore

LogFn = Callable[[str], None]

DEFAULT_LEAF_SIZE = 12


def _noop(_: str) -> None:
    return


def build_subgame(
    game: InfluenceGame,
    nodes: Sequence[int],
    indifferent: Set[int],
    ignored: Set[Tuple[int, int]],
) -> InfluenceGame:
    """
    Game on `nodes` (relabelled 0..k-1 in the given order).

    Players in `indifferent` lose their incoming arcs and get threshold 0, so
    any action is a best response for them. Arcs along `ignored` edges vanish.
    """
    local = {v: k for k, v in enumerate(nodes)}
    arcs = []
    for v in nodes:
        if v in indifferent:
            continue
        for u, w in game.in_arcs(v):
            if u in local and (min(u, v), max(u, v)) not in ignored:
                arcs.append((local[u], local[v], w))
    thresholds = [0.0 if v in indifferent else game.thresholds[v] for v in nodes]
    labels = [game.labels[v] for v in nodes]
    return InfluenceGame.from_arcs(len(nodes), arcs, thresholds, labels=labels, tie_epsilon=game.tie_epsilon)


def _join(
    sep: FrozenSet[int],
    parts: List[Tuple[List[int], List[JointAction]]],
    n: int,
) -> List[List[int]]:
    """Outer join of component solutions on their shared separator assignment."""
    s_nodes = sorted(sep)
    merged: List[Tuple[Tuple[int, ...], List[int]]] = [((), [0] * n)]
    first = True
    for nodes, sols in parts:
        pos = {v: k for k, v in enumerate(nodes)}
        grouped: Dict[Tuple[int, ...], List[JointAction]] = {}
        for y in sols:
            key = tuple(y[pos[s]] for s in s_nodes)
            grouped.setdefault(key, []).append(y)
        nxt: List[Tuple[Tuple[int, ...], List[int]]] = []
        for key, base in merged:
            options = grouped.items() if first else [(key, grouped.get(key, []))]
            for k2, ys in options:
                for y in ys:
                    x = list(base)
                    for v, a in zip(nodes, y):
                        x[v] = a
                    nxt.append((k2, x))
        merged = nxt
        first = False
        if not merged:
            break
    return [x for _, x in merged]


class _Solver:
    def __init__(self, cfg: SearchConfig, drop: int, leaf_size: int, log_fn: LogFn):
        self.cfg = cfg
        self.drop = drop
        self.leaf_size = leaf_size
        self.log = log_fn
        self.stats = StatsStore()

    def leaf(self, game: InfluenceGame) -> List[JointAction]:
        found, stats = enumerate_psne(game, replace(self.cfg, count_only=False, parallel=False, limit=None))
        self.stats.add(stats)
        return found

    def solve(self, game: InfluenceGame, depth: int, parallel: bool) -> List[JointAction]:
        if game.n <= self.leaf_size:
            return self.leaf(game)

        G = undirected_graph(game)
        sep = separator_of_graph(G, drop=self.drop)
        ignored = set(sep.dropped)
        pieces = [sorted(comp | sep.vertex_set) for comp in sep.components]
        if len(pieces) < 2 or any(len(p) >= game.n for p in pieces):
            return self.leaf(game)

        self.log(
            f"[DNC] depth {depth}: n={game.n}, |S|={len(sep.vertex_set)}, "
            f"parts={[len(c) for c in sep.components]}, dropped={len(sep.dropped)}"
        )

        subgames = [build_subgame(game, nodes, set(sep.vertex_set), ignored) for nodes in pieces]
        if parallel:
            with ThreadPoolExecutor(max_workers=self.cfg.threads) as pool:
                sols = list(pool.map(lambda g: self.solve(g, depth + 1, False), subgames))
        else:
            sols = [self.solve(g, depth + 1, False) for g in subgames]

        joined = _join(sep.vertex_set, list(zip(pieces, sols)), game.n)
        return sorted(tuple(x) for x in joined if is_psne(game, x))


def solve_divide_conquer(
    game: InfluenceGame,
    cfg: Optional[SearchConfig] = None,
    anytime_drop: int = 0,
    *,
    leaf_size: int = DEFAULT_LEAF_SIZE,
    log_fn: Optional[LogFn] = None,
) -> Tuple[List[JointAction], bool]:
    """
    PSNE by separator splitting.

    Subgames cover one side plus the separator, whose players are made
    indifferent; their solutions are joined on the separator and every merged
    profile is re-checked on the full game. With anytime_drop > 0 the weakest
    cut edges are ignored, so the result is a verified subset and the
    exactness flag is False.
    """
    found, _, exact = solve_divide_conquer_with_stats(
        game, cfg, anytime_drop, leaf_size=leaf_size, log_fn=log_fn
    )
    return found, exact


def solve_divide_conquer_with_stats(
    game: InfluenceGame,
    cfg: Optional[SearchConfig] = None,
    anytime_drop: int = 0,
    *,
    leaf_size: int = DEFAULT_LEAF_SIZE,
    log_fn: Optional[LogFn] = None,
) -> Tuple[List[JointAction], SearchStats, bool]:
    cfg = cfg or SearchConfig()
    started = time.perf_counter()
    solver = _Solver(cfg, max(0, int(anytime_drop)), max(2, int(leaf_size)), log_fn or _noop)
    found = solver.solve(game, 0, cfg.parallel and cfg.threads > 1)
    stats = solver.stats.snapshot()
    stats.psne_found = len(found)
    stats.wall_time = time.perf_counter() - started
    return found, stats, anytime_drop <= 0
