"""
Learning a game from voting instances.

Each player gets an independent L2-regularized logistic regression of its
vote on everybody else's, parameterized so that the linear form is exactly
the player's influence function f_i(x) = sum_j w_ji x_j - b_i.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import expit, log_expit

from src.game_core import InfluenceGame, JointAction, ValidationError, is_psne

from .models import LearnConfig, PlayerFit, VoteMatrix, check_rows

LogFn = Callable[[str], None]

# Below this step length a line search is considered stalled
_MIN_STEP = 1e-20


def _noop(_: str) -> None:
    return


def _design(X: np.ndarray, i: int) -> Tuple[np.ndarray, np.ndarray, List[int]]:
    """Features x_{-i} plus a constant -1 column for the threshold."""
    others = [j for j in range(X.shape[1]) if j != i]
    A = np.column_stack([X[:, others], -np.ones(X.shape[0])])
    return A, X[:, i], others


def _objective(theta: np.ndarray, A: np.ndarray, y: np.ndarray, lam: float) -> float:
    return float(-np.mean(log_expit(y * (A @ theta))) + 0.5 * lam * (theta @ theta))


def _gradient(theta: np.ndarray, A: np.ndarray, y: np.ndarray, lam: float) -> np.ndarray:
    s = expit(-y * (A @ theta))
    return -(A.T @ (y * s)) / A.shape[0] + lam * theta


def fit_player(X: np.ndarray, i: int, cfg: LearnConfig) -> PlayerFit:
    """
    Gradient descent with Armijo backtracking on one player's objective.

    The step grows back toward step_init after every accepted move, so the
    objective trace is strictly decreasing.
    """
    A, y, others = _design(X, i)
    lam = float(cfg.l2_lambda)
    theta = np.zeros(A.shape[1])
    obj = _objective(theta, A, y, lam)
    trace = [obj]
    step = float(cfg.step_init)
    iterations = 0
    g = _gradient(theta, A, y, lam)
    gnorm = float(np.linalg.norm(g))

    while gnorm >= cfg.tolerance and iterations < cfg.max_iters:
        step = min(float(cfg.step_init), step / cfg.step_shrink)
        while True:
            cand = theta - step * g
            cand_obj = _objective(cand, A, y, lam)
            if cand_obj <= obj - cfg.armijo_c * step * gnorm * gnorm:
                break
            step *= cfg.step_shrink
            if step < _MIN_STEP:
                break
        if step < _MIN_STEP:
            break
        theta, obj = cand, cand_obj
        trace.append(obj)
        iterations += 1
        g = _gradient(theta, A, y, lam)
        gnorm = float(np.linalg.norm(g))

    weights = {j: float(w) for j, w in zip(others, theta[:-1])}
    return PlayerFit(i, weights, float(theta[-1]), iterations, gnorm, gnorm < cfg.tolerance, trace)


def learn_lig_with_fits(
    votes: VoteMatrix,
    cfg: Optional[LearnConfig] = None,
    *,
    threads: int = 1,
    log_fn: Optional[LogFn] = None,
) -> Tuple[InfluenceGame, List[PlayerFit]]:
    log = log_fn or _noop
    cfg = cfg or LearnConfig()
    n = votes.n
    if n < 2:
        raise ValidationError(f"Learning needs at least 2 players (got {n}).")
    X = np.asarray(votes.instances, dtype=float)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            fits = list(pool.map(lambda i: fit_player(X, i, cfg), range(n)))
    else:
        fits = [fit_player(X, i, cfg) for i in range(n)]

    arcs = []
    for fit in fits:
        arcs.extend((j, fit.player, w) for j, w in sorted(fit.weights.items()) if w != 0.0)
        if fit.converged:
            log(f"[LEARN] Player {votes.labels[fit.player]}: converged after {fit.iterations} step(s).")
        else:
            log(
                f"[WARN] Player {votes.labels[fit.player]}: no convergence after {fit.iterations} step(s), "
                f"gradient norm {fit.grad_norm:.3e}."
            )
    game = InfluenceGame.from_arcs(n, arcs, [fit.threshold for fit in fits], labels=votes.labels)
    log(f"[OK] Learned a {n}-player game from {len(votes)} instance(s), lambda={cfg.l2_lambda}.")
    return game, fits


def learn_lig(
    votes: VoteMatrix,
    cfg: Optional[LearnConfig] = None,
    *,
    threads: int = 1,
    log_fn: Optional[LogFn] = None,
) -> InfluenceGame:
    """Fit every player's regression; column i of W and b_i come from player i's fit."""
    return learn_lig_with_fits(votes, cfg, threads=threads, log_fn=log_fn)[0]


def psne_representation_rate(
    game: InfluenceGame,
    votes: Union[VoteMatrix, Sequence[JointAction]],
) -> float:
    """Fraction of the instances that are PSNE of the game; 0.0 when there are none."""
    rows = votes.instances if isinstance(votes, VoteMatrix) else check_rows(votes, game.n)
    if not rows:
        return 0.0
    if len(rows[0]) != game.n:
        raise ValidationError(f"Instances have {len(rows[0])} votes, the game has {game.n} players.")
    return sum(1 for x in rows if is_psne(game, x)) / len(rows)
