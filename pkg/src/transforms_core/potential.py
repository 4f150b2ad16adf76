from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.game_core import InfluenceGame, JointAction, ValidationError
from src.game_core.constants import DEFAULT_BRUTE_FORCE_CAP, POTENTIAL_TOLERANCE
from src.game_core.oracles import decode_joint_actions
from src.game_core.validators import validate_cap, validate_joint_action

SYMMETRIC_EXACT = "symmetric_exact"
INDISCRIMINATE_ORDINAL = "indiscriminate_ordinal"
NONE_DETECTED = "none"


@dataclass(frozen=True)
class PotentialKind:
    variant: str
    rho: int = 0
    delta: Tuple[float, ...] = ()

    @property
    def detected(self) -> bool:
        return self.variant != NONE_DETECTED


def detect_potential(game: InfluenceGame, *, tol: float = POTENTIAL_TOLERANCE) -> PotentialKind:
    """Symmetric weights win over indiscriminate ones when both match."""
    W = game.weights
    if np.all(np.abs(W - W.T) <= tol):
        return PotentialKind(SYMMETRIC_EXACT)

    n = game.n
    delta: List[float] = []
    for i in range(n):
        row = [W[i, j] for j in range(n) if j != i]
        d = row[0]
        if abs(d) <= tol or any(abs(v - d) > tol for v in row):
            return PotentialKind(NONE_DETECTED)
        delta.append(float(d))
    signs = {1 if d > 0 else -1 for d in delta}
    if len(signs) != 1:
        return PotentialKind(NONE_DETECTED)
    return PotentialKind(INDISCRIMINATE_ORDINAL, rho=signs.pop(), delta=tuple(delta))


def _phi_rows(game: InfluenceGame, kind: PotentialKind, X: np.ndarray) -> np.ndarray:
    b = game.b
    if kind.variant == SYMMETRIC_EXACT:
        # sum_t x_t (sum_{i != t} x_i w_it / 2 - b_t)
        return 0.5 * np.einsum("ri,it,rt->r", X, game.weights, X) - X @ b
    if kind.variant == INDISCRIMINATE_ORDINAL:
        delta = np.asarray(kind.delta, dtype=float)
        s = X @ delta
        return kind.rho * (s * s - 2.0 * (X @ (b * delta)))
    raise ValidationError("No potential function for a game without a detected potential.")


def potential_value(game: InfluenceGame, kind: PotentialKind, x: Sequence[int]) -> float:
    x = validate_joint_action(game, x)
    X = np.asarray([x], dtype=float)
    return float(_phi_rows(game, kind, X)[0])


def local_maxima(
    game: InfluenceGame,
    kind: PotentialKind,
    *,
    tol: float = 1e-9,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> List[JointAction]:
    """Joint actions no unilateral flip can raise the potential of, in lexicographic order."""
    n = game.n
    validate_cap(n, cap)
    codes = np.arange(1 << n, dtype=np.int64)
    X = decode_joint_actions(codes, n).astype(float)
    phi = _phi_rows(game, kind, X)
    keep = np.ones(len(codes), dtype=bool)
    for k in range(n):
        flipped = codes ^ (1 << (n - 1 - k))
        keep &= phi >= phi[flipped] - tol
    return [tuple(int(v) for v in X[r]) for r in np.nonzero(keep)[0]]
