"""
Benchmark suites over the synthetic game families.

Every trial draws its game (and target PSNE) from a seed derived from
(seed, row, trial), so rows are reproducible on their own and do not depend
on the worker count. Tables carry no timings, so a rerun gives identical
bytes.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import stats as sstats

from src.game_core import InfeasibleError, InfluenceGame, ValidationError
from src.genlearn_core import gen_erdos_renyi, gen_pref_attach, gen_uniform_random
from src.influence_core import GoalSpec, exact_most_influential, greedy_most_influential
from src.solver_core import SearchConfig, enumerate_psne

LogFn = Callable[[str], None]
Row = Dict[str, Any]

UNIFORM = "uniform"
PREFATTACH = "prefattach"
ERDOS = "erdos"
SUITES = (UNIFORM, PREFATTACH, ERDOS)

UNIFORM_COLUMNS = (
    "p", "n", "trials", "avg_psne", "ci", "avg_visits", "visits_ci",
    "avg_approx", "avg_opt", "pct_eq", "pct_le1", "pct_le2",
)
PREFATTACH_COLUMNS = ("p", "n", "trials", "avg_psne", "ci", "avg_visits", "visits_ci")
ERDOS_COLUMNS = ("edge_p", "n", "trials", "avg_psne", "ci", "pct_none")

UNIFORM_FLIPS = (0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0)
UNIFORM_ARC_P = 0.5
PREFATTACH_SIZES = (20, 25, 30, 35)
ERDOS_SIZES = (10, 15, 20, 25, 30)
ERDOS_EDGE_PS = (0.1, 0.2, 0.3)


def _noop(_: str) -> None:
    return


@dataclass(frozen=True)
class BenchOptions:
    trials: int = 100
    seed: int = 0
    threads: int = 1
    exact_cap: int = 25
    use_propagation: bool = True
    search_budget: Optional[int] = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValidationError(f"trials must be >= 1 (got {self.trials}).")
        if self.threads < 1:
            raise ValidationError(f"threads must be >= 1 (got {self.threads}).")

    def search_config(self) -> SearchConfig:
        return SearchConfig(max_nodes=self.search_budget, use_propagation=self.use_propagation)


def trial_seed(seed: int, *keys: int) -> int:
    return int(np.random.SeedSequence([int(seed), *(int(k) for k in keys)]).generate_state(1)[0])


def mean_ci(values: Sequence[float]) -> Tuple[float, float]:
    """Mean and half-width of its 95% Student-t confidence interval."""
    k = len(values)
    if k == 0:
        return 0.0, 0.0
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if k < 2:
        return mean, 0.0
    sd = float(arr.std(ddof=1))
    return mean, float(sstats.t.ppf(0.975, k - 1) * sd / math.sqrt(k))


def _map_trials(fn: Callable[[int], Any], trials: int, threads: int) -> List[Any]:
    if threads > 1 and trials > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, range(trials)))
    return [fn(t) for t in range(trials)]


def _count_trial(game: InfluenceGame, cfg: SearchConfig) -> Tuple[List[Tuple[int, ...]], int]:
    psne, stats = enumerate_psne(game, cfg)
    return psne, stats.nodes_visited


# -------------------------
# Uniform random digraphs
# -------------------------

def _uniform_trial(n: int, p: float, row: int, opts: BenchOptions, t: int) -> Optional[Dict[str, Any]]:
    game = gen_uniform_random(n, UNIFORM_ARC_P, p, seed=trial_seed(opts.seed, row, t))
    psne, visits = _count_trial(game, opts.search_config())
    if not psne:
        return None
    rng = np.random.default_rng(trial_seed(opts.seed, row, t, 1))
    goal = GoalSpec.target_psne(psne[int(rng.integers(0, len(psne)))])
    approx = greedy_most_influential(game, psne, goal).size
    opt: Optional[int] = None
    try:
        opt = exact_most_influential(game, psne, goal, cap=opts.exact_cap).size
    except InfeasibleError:
        pass
    return {"psne": len(psne), "visits": visits / len(psne), "approx": approx, "opt": opt}


def bench_uniform(
    flips: Sequence[float] = UNIFORM_FLIPS,
    n: int = 25,
    opts: Optional[BenchOptions] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> List[Row]:
    """
    PSNE counts, search effort and greedy-vs-optimal sizes on uniform random
    digraphs (arc probability 0.5), one row per flip probability. Games
    without a PSNE are left out of every column and `trials` counts the rest.
    Trials whose exact optimum failed are also left out of the size columns.
    """
    log = log_fn or _noop
    opts = opts or BenchOptions()
    rows: List[Row] = []
    for row, p in enumerate(flips):
        results = [r for r in _map_trials(lambda t: _uniform_trial(n, p, row, opts, t), opts.trials, opts.threads) if r]
        avg_psne, ci = mean_ci([r["psne"] for r in results])
        avg_visits, visits_ci = mean_ci([r["visits"] for r in results])
        k = len(results)
        sized = [r for r in results if r["opt"] is not None]
        if len(sized) < k:
            log(f"[WARN] uniform p={p}: no exact optimum in {k - len(sized)} trial(s); left out of the size columns.")
        m = len(sized)
        gaps = [r["approx"] - r["opt"] for r in sized]
        rows.append(
            {
                "p": p,
                "n": n,
                "trials": k,
                "avg_psne": avg_psne,
                "ci": ci,
                "avg_visits": avg_visits,
                "visits_ci": visits_ci,
                "avg_approx": float(np.mean([r["approx"] for r in sized])) if m else 0.0,
                "avg_opt": float(np.mean([r["opt"] for r in sized])) if m else 0.0,
                "pct_eq": 100.0 * sum(g == 0 for g in gaps) / m if m else 0.0,
                "pct_le1": 100.0 * sum(g <= 1 for g in gaps) / m if m else 0.0,
                "pct_le2": 100.0 * sum(g <= 2 for g in gaps) / m if m else 0.0,
            }
        )
        log(f"[BENCH] uniform p={p}: {k}/{opts.trials} games with PSNE, avg {avg_psne:.2f} PSNE")
    return rows


# -------------------------
# Preferential attachment
# -------------------------

def bench_prefattach(
    sizes: Sequence[int] = PREFATTACH_SIZES,
    p: float = 1.0,
    m: int = 3,
    opts: Optional[BenchOptions] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> List[Row]:
    """PSNE counts on preferential-attachment games, one row per size."""
    log = log_fn or _noop
    opts = opts or BenchOptions(trials=20)
    rows: List[Row] = []
    for row, n in enumerate(sizes):
        def trial(t: int) -> Tuple[int, int]:
            game = gen_pref_attach(n, m, p, seed=trial_seed(opts.seed, row, t))
            psne, visits = _count_trial(game, opts.search_config())
            return len(psne), visits

        results = _map_trials(trial, opts.trials, opts.threads)
        avg_psne, ci = mean_ci([c for c, _ in results])
        avg_visits, visits_ci = mean_ci([v / c for c, v in results if c])
        rows.append(
            {"p": p, "n": n, "trials": len(results), "avg_psne": avg_psne, "ci": ci,
             "avg_visits": avg_visits, "visits_ci": visits_ci}
        )
        log(f"[BENCH] prefattach n={n}: avg {avg_psne:.2f} PSNE over {len(results)} games")
    return rows


# -------------------------
# Erdos-Renyi unit-sphere games
# -------------------------

def bench_erdos(
    sizes: Sequence[int] = ERDOS_SIZES,
    edge_ps: Sequence[float] = ERDOS_EDGE_PS,
    opts: Optional[BenchOptions] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> List[Row]:
    """PSNE counts and the share of games without any, per (edge_p, n)."""
    log = log_fn or _noop
    opts = opts or BenchOptions(trials=20)
    rows: List[Row] = []
    row = 0
    for edge_p in edge_ps:
        for n in sizes:
            key = row

            def trial(t: int) -> int:
                game = gen_erdos_renyi(n, edge_p, seed=trial_seed(opts.seed, key, t))
                return len(_count_trial(game, opts.search_config())[0])

            counts = _map_trials(trial, opts.trials, opts.threads)
            avg_psne, ci = mean_ci(counts)
            rows.append(
                {"edge_p": edge_p, "n": n, "trials": len(counts), "avg_psne": avg_psne, "ci": ci,
                 "pct_none": 100.0 * sum(c == 0 for c in counts) / len(counts)}
            )
            log(f"[BENCH] erdos edge_p={edge_p} n={n}: avg {avg_psne:.2f} PSNE")
            row += 1
    return rows


SUITE_COLUMNS = {UNIFORM: UNIFORM_COLUMNS, PREFATTACH: PREFATTACH_COLUMNS, ERDOS: ERDOS_COLUMNS}
DEFAULT_TRIALS = {UNIFORM: 100, PREFATTACH: 20, ERDOS: 20}


def run_suite(
    name: str,
    opts: Optional[BenchOptions] = None,
    values: Optional[Sequence[float]] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> List[Row]:
    """Run a suite by name; values replaces the flip sweep (uniform) or the size sweep (the others)."""
    if name == UNIFORM:
        return bench_uniform(tuple(values) if values else UNIFORM_FLIPS, opts=opts, log_fn=log_fn)
    sizes = tuple(int(v) for v in values) if values else None
    if name == PREFATTACH:
        return bench_prefattach(sizes or PREFATTACH_SIZES, opts=opts, log_fn=log_fn)
    if name == ERDOS:
        return bench_erdos(sizes or ERDOS_SIZES, opts=opts, log_fn=log_fn)
    raise ValidationError(f"Unknown bench suite '{name}' (expected one of {', '.join(SUITES)}).")


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def write_bench_csv(rows: Sequence[Row], columns: Sequence[str], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
    return path
