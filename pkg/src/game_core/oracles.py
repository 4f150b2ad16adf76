from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

import numpy as np

from .constants import BRUTE_FORCE_CHUNK, DEFAULT_BRUTE_FORCE_CAP
from .models import InfluenceGame, JointAction, PartialAssignment
from .payoffs import is_psne
from .validators import validate_cap, validate_partial

# Margin band in which the vectorized check defers to the exact scalar check
_BORDER = 1e-9


def decode_joint_actions(codes: np.ndarray, width: int) -> np.ndarray:
    """Rows of +-1 for integer codes; bit (width-1-k) is column k so codes run lexicographically."""
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    bits = (codes[:, None] >> shifts) & 1
    return (bits * 2 - 1).astype(np.int8)


def _scan(
    game: InfluenceGame,
    free: Sequence[int],
    fixed: PartialAssignment,
    lo: int,
    hi: int,
) -> List[JointAction]:
    n = game.n
    W = game.weights
    b = game.b
    eps = game.tie_epsilon

    codes = np.arange(lo, hi, dtype=np.int64)
    X = np.empty((len(codes), n), dtype=float)
    if free:
        X[:, list(free)] = decode_joint_actions(codes, len(free))
    for i, a in fixed.items():
        X[:, i] = a

    margin = (X * (X @ W - b)).min(axis=1)
    sure = margin >= -eps + _BORDER
    border = np.abs(margin + eps) < _BORDER

    found: List[JointAction] = []
    for row, ok, near in zip(X, sure, border):
        if ok:
            found.append(tuple(int(v) for v in row))
        elif near:
            x = tuple(int(v) for v in row)
            if is_psne(game, x):
                found.append(x)
    return found


def _run(
    game: InfluenceGame,
    partial: PartialAssignment,
    cap: int,
    threads: int,
) -> List[JointAction]:
    validate_partial(game, partial)
    free = [i for i in range(game.n) if i not in partial]
    validate_cap(len(free), cap)

    total = 1 << len(free)
    ranges = [(lo, min(lo + BRUTE_FORCE_CHUNK, total)) for lo in range(0, total, BRUTE_FORCE_CHUNK)]

    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _scan(game, free, partial, r[0], r[1]), ranges))
    else:
        parts = [_scan(game, free, partial, lo, hi) for lo, hi in ranges]

    out = [x for part in parts for x in part]
    out.sort()
    return out


def brute_force_psne(
    game: InfluenceGame,
    *,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
    threads: int = 1,
) -> List[JointAction]:
    """Every PSNE of the game in lexicographic order (-1 before +1)."""
    return _run(game, PartialAssignment(), cap, threads)


def brute_force_extension_count(
    game: InfluenceGame,
    partial: PartialAssignment,
    *,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
    threads: int = 1,
) -> int:
    """Number of PSNE agreeing with `partial`. The cap applies to the unassigned players."""
    return len(_run(game, partial, cap, threads))


def brute_force_extensions(
    game: InfluenceGame,
    partial: PartialAssignment,
    *,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> List[JointAction]:
    return _run(game, partial, cap, 1)


