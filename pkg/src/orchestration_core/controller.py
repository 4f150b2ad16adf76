from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from src.game_core import (
    BudgetExhaustedError,
    InfeasibleError,
    InfluenceGame,
    JointAction,
    NotApplicableError,
    ValidationError,
    read_game,
    write_game,
)
from src.genlearn_core import (
    GenConfig,
    generate,
    learn_lig_with_fits,
    psne_representation_rate,
    read_votes_csv,
)
from src.influence_core import (
    ExtensionCounter,
    exact_most_influential,
    greedy_most_influential,
    read_goal,
    read_preference,
    read_vector,
    write_dag,
    write_result,
)
from src.reductions_core import (
    BASIC,
    gadget_3sat,
    gadget_knapsack_star,
    gadget_one_in_three,
    read_dimacs,
    read_knapsack,
)
from src.scenario_core import (
    BREAK,
    DIFFUSION,
    PREVENT,
    SCENARIO_MODES,
    ClotureSpec,
    ScenarioReport,
    cloture_preventers,
    diffusion_filibuster,
    diffusion_most_influential,
    filibuster_breakers,
    stable_cloture_set,
)
from src.solver_core import (
    AUTO,
    BACKTRACK,
    DNC,
    METHODS,
    SUPERMODULAR,
    TREE,
    SearchStats,
    dumps_stats,
    enumerate_psne,
    is_forest_game,
    read_psne,
    solve_divide_conquer_with_stats,
    solve_tree,
    supermodular_extremes,
    write_psne,
)
from src.transforms_core import (
    detect_potential,
    lig_to_polymatrix,
    local_maxima,
    polymatrix_to_lig,
    read_polymatrix,
    write_polymatrix,
    zero_one_to_pm1,
)

from .bench import DEFAULT_TRIALS, SUITE_COLUMNS, SUITES, BenchOptions, run_suite, write_bench_csv
from .settings import Settings

LogFn = Callable[[str], None]
PathLike = Union[str, Path]

GADGET_3SAT = "3sat"
GADGET_ONE_IN_THREE = "one-in-three"
GADGET_KNAPSACK = "knapsack"
GADGET_KINDS = (GADGET_3SAT, GADGET_ONE_IN_THREE, GADGET_KNAPSACK)

TO_POLYMATRIX = "to-polymatrix"
FROM_POLYMATRIX = "from-polymatrix"
ZERO_ONE = "zero-one"
POTENTIAL = "potential"
TRANSFORM_KINDS = (TO_POLYMATRIX, FROM_POLYMATRIX, ZERO_ONE, POTENTIAL)


def _write_json(data: Any, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    return path


class LigController:
    """
    Front-end agnostic orchestration layer.

    Owns the live settings and turns file-level requests into calls on the
    engine packages. Every method returns the paths it wrote, which the CLI
    hashes into the run manifest.
    """

    def __init__(self, settings: Optional[Settings] = None, log_fn: Optional[LogFn] = None):
        self._log = log_fn or (lambda _: None)
        self._settings = settings or Settings()

    # -------------------------
    # Settings / inputs
    # -------------------------

    @property
    def settings(self) -> Settings:
        return self._settings

    def load_game(self, path: PathLike) -> InfluenceGame:
        game = read_game(path)
        eps = self.settings.tie_epsilon
        if eps > 0 and game.tie_epsilon == 0:
            game = game.with_tie_epsilon(eps)
        self._log(f"[INFO] Loaded {game.n}-player game with {len(game.arcs)} arcs from {path}")
        return game

    def _psne(self, game: InfluenceGame, psne_path: Optional[PathLike]) -> List[JointAction]:
        if psne_path is not None:
            psne = read_psne(psne_path)
            bad = [x for x in psne if len(x) != game.n]
            if bad:
                raise ValidationError(f"{psne_path}: PSNE rows must have {game.n} actions.")
            return psne
        psne, _ = enumerate_psne(game, self.settings.search_config(), log_fn=self._log)
        return psne

    def _party(self, game: InfluenceGame, path: Optional[PathLike]) -> frozenset:
        if path is None:
            return frozenset()
        index = {label: i for i, label in enumerate(game.labels)}
        out = set()
        for item in read_vector(path, "Party"):
            if isinstance(item, str) and item in index:
                out.add(index[item])
            elif isinstance(item, int) and not isinstance(item, bool):
                out.add(item)
            else:
                raise ValidationError(f"Party member {item!r} is neither a player index nor a label.")
        return frozenset(out)

    # -------------------------
    # Generate
    # -------------------------

    def generate(self, cfg: GenConfig, out: PathLike) -> List[Path]:
        game = generate(cfg, log_fn=self._log)
        return [write_game(game, out)]

    # -------------------------
    # Solve
    # -------------------------

    def pick_method(self, game: InfluenceGame, method: str, *, count_only: bool = False, first: bool = False) -> str:
        """
        Resolve `auto`. Full enumeration and counting go to backtracking; a
        single requested PSNE goes to the tree method on forests, to the
        supermodular method on nonnegative games, else to backtracking.
        """
        if method not in METHODS:
            raise ValidationError(f"Unknown method '{method}' (expected one of {', '.join(METHODS)}).")
        if method != AUTO:
            if count_only and method in (TREE, SUPERMODULAR):
                raise NotApplicableError(f"The {method} method finds PSNE, it cannot count them.")
            return method
        if count_only or not first:
            return BACKTRACK
        if is_forest_game(game):
            return TREE
        if game.all_nonnegative():
            return SUPERMODULAR
        return BACKTRACK

    def solve(
        self,
        game_path: PathLike,
        out: PathLike,
        *,
        method: str = AUTO,
        count_only: bool = False,
        first: bool = False,
        budget: Optional[int] = None,
        anytime_drop: int = 0,
        stats_out: Optional[PathLike] = None,
    ) -> List[Path]:
        game = self.load_game(game_path)
        chosen = self.pick_method(game, method, count_only=count_only, first=first)
        limit = 1 if first and not count_only and chosen == BACKTRACK else None
        cfg = self.settings.search_config(count_only=count_only, budget=budget, limit=limit)
        self._log(f"[INFO] Solving with method '{chosen}'.")

        stats: Optional[SearchStats] = None
        exact = True
        try:
            if chosen == TREE:
                x = solve_tree(game)
                psne = [x] if x is not None else []
            elif chosen == SUPERMODULAR:
                low, high = supermodular_extremes(game, log_fn=self._log)
                psne = [low] if first else sorted({low, high})
            elif chosen == DNC:
                psne, stats, exact = solve_divide_conquer_with_stats(
                    game, cfg, anytime_drop, leaf_size=self.settings.dnc_leaf_size, log_fn=self._log
                )
            else:
                psne, stats = enumerate_psne(game, cfg, log_fn=self._log)
        except BudgetExhaustedError as e:
            self._log(f"[WARN] {e} Writing {len(e.partial)} PSNE found so far.")
            self._write_solution(e.partial, e.stats, out, stats_out, count_only, chosen, False)
            raise

        if first:
            psne = psne[:1]
        self._log(f"[OK] {stats.psne_found if count_only and stats else len(psne)} PSNE ({chosen}).")
        return self._write_solution(psne, stats, out, stats_out, count_only, chosen, exact)

    def _write_solution(
        self,
        psne: Sequence[JointAction],
        stats: Optional[SearchStats],
        out: PathLike,
        stats_out: Optional[PathLike],
        count_only: bool,
        method: str,
        exact: bool,
    ) -> List[Path]:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        if count_only:
            data: Dict[str, Any] = {"method": method, "count": stats.psne_found if stats else len(psne), "exact": exact}
            if stats is not None:
                data["nodes_visited"] = stats.nodes_visited
            return [_write_json(data, out)]
        written = [write_psne(psne, out)]
        if stats_out is not None and stats is not None:
            p = Path(stats_out)
            p.write_text(dumps_stats(stats, timing=False), encoding="utf-8")
            written.append(p)
        return written

    # -------------------------
    # Most influential
    # -------------------------

    def influential(
        self,
        game_path: PathLike,
        out: PathLike,
        *,
        goal: str = "max-adopters",
        pref: str = "min-card",
        exact: bool = False,
        psne_path: Optional[PathLike] = None,
        live: bool = False,
        adopters_only: bool = False,
        explore_ties: bool = False,
        dag_out: Optional[PathLike] = None,
    ) -> List[Path]:
        game = self.load_game(game_path)
        goal_spec = read_goal(goal)
        set_pref = read_preference(pref)
        s = self.settings
        psne: Optional[List[JointAction]] = None
        count_fn = None
        if live:
            count_fn = ExtensionCounter(game, s.search_config())
        else:
            psne = self._psne(game, psne_path)

        if exact:
            result = exact_most_influential(
                game, psne, goal_spec, set_pref, count_fn,
                cap=s.exact_cap, adopters_only=adopters_only, threads=s.threads, log_fn=self._log,
            )
        else:
            result = greedy_most_influential(
                game, psne, goal_spec, set_pref, count_fn,
                adopters_only=adopters_only, explore_ties=explore_ties or dag_out is not None,
                tie_width=s.tie_width, threads=s.threads, log_fn=self._log,
            )
        names = [game.label(i) for i in result.selected]
        self._log(f"[OK] Most influential ({result.method}): {', '.join(names) or 'none needed'}")
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        written = [write_result(result, out)]
        if dag_out is not None and result.dag is not None:
            written.append(write_dag(result.dag, dag_out))
        return written

    # -------------------------
    # Scenarios
    # -------------------------

    def scenario(
        self,
        game_path: PathLike,
        out: PathLike,
        *,
        mode: str,
        quota: int,
        party_path: Optional[PathLike] = None,
        k_max: int = 1,
        exact: bool = False,
        psne_path: Optional[PathLike] = None,
        spread: bool = False,
    ) -> List[Path]:
        if mode not in SCENARIO_MODES:
            raise ValidationError(f"Unknown scenario mode '{mode}' (expected one of {', '.join(SCENARIO_MODES)}).")
        game = self.load_game(game_path)
        spec = ClotureSpec(quota, self._party(game, party_path))
        spec.check_players(game.n)
        s = self.settings
        psne = self._psne(game, psne_path)
        cloture = stable_cloture_set(psne, spec)
        self._log(f"[INFO] {len(cloture)} of {len(psne)} PSNE meet the cloture spec.")
        report = ScenarioReport(mode, spec, len(cloture))

        if mode == BREAK:
            report.coalition = filibuster_breakers(game, psne, cloture, exact, cap=s.exact_cap, log_fn=self._log)
        elif mode == PREVENT:
            report.coalition = cloture_preventers(game, psne, cloture, exact, cap=s.exact_cap, log_fn=self._log)
        elif mode == DIFFUSION:
            rounds = s.round_cap(game.n)
            report.hits = diffusion_filibuster(
                game, spec, k_max, max_rounds=rounds, threads=s.threads, log_fn=self._log
            )
            if spread:
                try:
                    report.spread = diffusion_most_influential(
                        game, max_rounds=rounds, threads=s.threads, log_fn=self._log
                    )
                except InfeasibleError as e:
                    self._log(f"[WARN] Spread heuristic gave up: {e}")
        return [_write_json(report.to_dict(), out)]

    # -------------------------
    # Learning
    # -------------------------

    def learn(
        self,
        votes_path: PathLike,
        out: PathLike,
        *,
        l2_lambda: Optional[float] = None,
        report_out: Optional[PathLike] = None,
    ) -> List[Path]:
        s = self.settings
        votes = read_votes_csv(votes_path, log_fn=self._log)
        game, fits = learn_lig_with_fits(votes, s.learn_config(l2_lambda), threads=s.threads, log_fn=self._log)
        rate = psne_representation_rate(game, votes)
        self._log(f"[OK] {rate:.1%} of {len(votes)} instance(s) are PSNE of the learned game.")
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        written = [write_game(game, out)]
        if report_out is not None:
            report = {
                "instances": len(votes),
                "players": votes.n,
                "l2_lambda": s.learn_config(l2_lambda).l2_lambda,
                "representation_rate": rate,
                "fits": [
                    {
                        "player": f.player,
                        "label": votes.labels[f.player],
                        "iterations": f.iterations,
                        "grad_norm": f.grad_norm,
                        "converged": f.converged,
                    }
                    for f in fits
                ],
            }
            written.append(_write_json(report, report_out))
        return written

    # -------------------------
    # Bench
    # -------------------------

    def bench(
        self,
        suite: str,
        out: PathLike,
        *,
        trials: Optional[int] = None,
        seed: int = 0,
        values: Optional[Sequence[float]] = None,
    ) -> List[Path]:
        if suite not in SUITES:
            raise ValidationError(f"Unknown bench suite '{suite}' (expected one of {', '.join(SUITES)}).")
        s = self.settings
        opts = BenchOptions(
            trials=trials if trials is not None else DEFAULT_TRIALS[suite],
            seed=seed,
            threads=s.threads,
            exact_cap=s.exact_cap,
            use_propagation=s.use_propagation,
            search_budget=s.search_budget,
        )
        rows = run_suite(suite, opts, values, log_fn=self._log)
        return [write_bench_csv(rows, SUITE_COLUMNS[suite], out)]

    # -------------------------
    # Gadgets / transforms
    # -------------------------

    def gadget(
        self,
        kind: str,
        source: PathLike,
        out: PathLike,
        *,
        epsilon: Optional[float] = None,
        variant: str = BASIC,
        designated_out: Optional[PathLike] = None,
    ) -> List[Path]:
        extra: Dict[str, Any] = {} if epsilon is None else {"epsilon": epsilon}
        designated: Optional[Sequence[int]] = None
        if kind == GADGET_3SAT:
            game = gadget_3sat(read_dimacs(source), **extra)
        elif kind == GADGET_ONE_IN_THREE:
            game, designated = gadget_one_in_three(read_dimacs(source), variant=variant, **extra)
        elif kind == GADGET_KNAPSACK:
            game = gadget_knapsack_star(read_knapsack(source), **extra)
        else:
            raise ValidationError(f"Unknown gadget '{kind}' (expected one of {', '.join(GADGET_KINDS)}).")
        game = zero_one_to_pm1(game)
        self._log(f"[OK] {kind} gadget: {game.n} players, {len(game.arcs)} arcs.")
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        written = [write_game(game, out)]
        if designated_out is not None and designated is not None:
            written.append(_write_json(list(designated), designated_out))
        return written

    def transform(self, kind: str, source: PathLike, out: PathLike) -> List[Path]:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        if kind == TO_POLYMATRIX:
            return [write_polymatrix(lig_to_polymatrix(self.load_game(source)), out)]
        if kind == FROM_POLYMATRIX:
            return [write_game(polymatrix_to_lig(read_polymatrix(source)), out)]
        if kind == ZERO_ONE:
            return [write_game(zero_one_to_pm1(read_game(source)), out)]
        if kind == POTENTIAL:
            return [_write_json(self.potential_report(self.load_game(source)), out)]
        raise ValidationError(f"Unknown transform '{kind}' (expected one of {', '.join(TRANSFORM_KINDS)}).")

    def potential_report(self, game: InfluenceGame) -> Dict[str, Any]:
        """Potential variant under the configured tolerance, plus its local maxima when brute force is allowed."""
        s = self.settings
        kind = detect_potential(game, tol=s.potential_tolerance)
        report: Dict[str, Any] = {
            "variant": kind.variant,
            "rho": kind.rho,
            "delta": list(kind.delta),
            "local_maxima": None,
        }
        if not kind.detected:
            self._log("[INFO] No potential detected.")
        elif game.n > s.brute_force_cap:
            self._log(f"[WARN] {game.n} players exceed brute_force_cap={s.brute_force_cap}; local maxima skipped.")
        else:
            maxima = local_maxima(game, kind, cap=s.brute_force_cap)
            report["local_maxima"] = [list(x) for x in maxima]
            self._log(f"[OK] {kind.variant} potential with {len(maxima)} local maxima.")
        return report
