from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from src.game_core import InfluenceGame, JointAction, ValidationError
from src.game_core.constants import DEFAULT_BRUTE_FORCE_CAP
from src.game_core.validators import validate_cap

# Tables are indexed [idx(x_j)][idx(x_i)] with idx(-1) = 0, idx(+1) = 1
Table = Tuple[Tuple[float, float], Tuple[float, float]]


def _idx(a: int) -> int:
    return 0 if a < 0 else 1


@dataclass(frozen=True)
class PolymatrixGame:
    """Two-action polymatrix game: u_i(x) = sum_{j != i} alpha_ji(x_j, x_i)."""

    n: int
    tables: Dict[Tuple[int, int], Table]

    def __post_init__(self) -> None:
        n = int(self.n)
        if n < 1:
            raise ValidationError(f"A polymatrix game needs at least one player (n={n}).")
        clean: Dict[Tuple[int, int], Table] = {}
        for key, t in self.tables.items():
            j, i = int(key[0]), int(key[1])
            if j == i:
                raise ValidationError(f"Polymatrix table on the diagonal ({j}, {i}).")
            if not (0 <= j < n and 0 <= i < n):
                raise ValidationError(f"Polymatrix table ({j}, {i}) references a player outside 0..{n - 1}.")
            try:
                rows = tuple(tuple(float(v) for v in row) for row in t)
            except TypeError as e:
                raise ValidationError(f"Polymatrix table ({j}, {i}) is not a 2x2 array.") from e
            if len(rows) != 2 or any(len(r) != 2 for r in rows):
                raise ValidationError(f"Polymatrix table ({j}, {i}) is not a 2x2 array.")
            clean[(j, i)] = rows  # type: ignore[assignment]
        if len(clean) != n * (n - 1):
            raise ValidationError(f"Polymatrix game over {n} players needs {n * (n - 1)} tables, got {len(clean)}.")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tables", clean)

    def alpha(self, j: int, i: int, xj: int, xi: int) -> float:
        return self.tables[(j, i)][_idx(xj)][_idx(xi)]


def lig_to_polymatrix(game: InfluenceGame) -> PolymatrixGame:
    """alpha_ji(x_j, x_i) = x_i w_ji x_j - x_i b_i / (n - 1)."""
    n = game.n
    if n < 2:
        raise ValidationError("Polymatrix conversion needs at least two players.")
    tables: Dict[Tuple[int, int], Table] = {}
    for i in range(n):
        share = game.thresholds[i] / (n - 1)
        for j in range(n):
            if j == i:
                continue
            w = game.weight(j, i)
            tables[(j, i)] = tuple(
                tuple(xi * w * xj - xi * share for xi in (-1, 1)) for xj in (-1, 1)
            )  # type: ignore[assignment]
    return PolymatrixGame(n, tables)


def polymatrix_to_lig(pm: PolymatrixGame, *, labels: Sequence[str] = ()) -> InfluenceGame:
    n = pm.n
    if n < 2:
        raise ValidationError("Polymatrix conversion needs at least two players.")
    arcs: List[Tuple[int, int, float]] = []
    thresholds = [0.0] * n
    for i in range(n):
        acc = 0.0
        for j in range(n):
            if j == i:
                continue
            (a_mm, a_mp), (a_pm, a_pp) = pm.tables[(j, i)]
            w = 0.25 * (a_pp - a_mp - a_pm + a_mm)
            acc += 0.25 * (a_pp + a_mp - a_pm - a_mm)
            if w != 0.0:
                arcs.append((j, i, w))
        thresholds[i] = -acc
    return InfluenceGame.from_arcs(n, arcs, thresholds, labels=labels)


def polymatrix_payoff(pm: PolymatrixGame, i: int, x: Sequence[int]) -> float:
    return sum(pm.alpha(j, i, x[j], x[i]) for j in range(pm.n) if j != i)


def polymatrix_is_psne(pm: PolymatrixGame, x: Sequence[int], *, tie_epsilon: float = 0.0) -> bool:
    for i in range(pm.n):
        y = list(x)
        y[i] = -y[i]
        if polymatrix_payoff(pm, i, x) < polymatrix_payoff(pm, i, y) - tie_epsilon:
            return False
    return True


def brute_force_polymatrix_psne(pm: PolymatrixGame, *, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> List[JointAction]:
    validate_cap(pm.n, cap)
    return [x for x in itertools.product((-1, 1), repeat=pm.n) if polymatrix_is_psne(pm, x)]


# -------------------------
# JSON
# -------------------------

def polymatrix_to_dict(pm: PolymatrixGame) -> dict:
    return {
        "n": pm.n,
        "index_order": "tables[j, i][idx(x_j)][idx(x_i)], idx(-1)=0, idx(+1)=1",
        "tables": [[j, i, [list(r) for r in pm.tables[(j, i)]]] for j, i in sorted(pm.tables)],
    }


def polymatrix_from_dict(data: dict) -> PolymatrixGame:
    try:
        tables = {(int(t[0]), int(t[1])): t[2] for t in data["tables"]}
        return PolymatrixGame(int(data["n"]), tables)
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise ValidationError(f"Malformed polymatrix document: {e}") from e


def write_polymatrix(pm: PolymatrixGame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(polymatrix_to_dict(pm), indent=2) + "\n", encoding="utf-8")
    return path


def read_polymatrix(path: Union[str, Path]) -> PolymatrixGame:
    path = Path(path)
    try:
        return polymatrix_from_dict(json.loads(path.read_text(encoding="utf-8")))
    except FileNotFoundError as e:
        raise ValidationError(f"Polymatrix file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"Polymatrix file is not valid JSON ({path}): {e}") from e
