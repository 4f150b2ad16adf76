"""
Coalitions that force a vote outcome.

A coalition V forced to action a keeps the PSNE P(V) = {x : x_i = a for
every i in V}. Breaking a filibuster asks for a smallest V forced to +1
with P(V) nonempty and inside the cloture set C; preventing cloture is the
same problem with -1 and the complement of C as target.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.game_core import (
    DEFAULT_BRUTE_FORCE_CAP,
    InfeasibleError,
    InfluenceGame,
    JointAction,
    ValidationError,
)
from src.game_core.validators import validate_cap

from .models import EXACT, HEURISTIC, CoalitionResult

LogFn = Callable[[str], None]


def _noop(_: str) -> None:
    return


def dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    """x dominates y when every +1 of y is also a +1 of x."""
    return all(a > 0 for a, b in zip(x, y) if b > 0)


def _bits(mask: int) -> int:
    return bin(mask).count("1")


class _Family:
    """PSNE as bitmasks per (player, action)."""

    def __init__(self, psne: Sequence[JointAction], action: int):
        self.psne = [tuple(x) for x in psne]
        self.n = len(self.psne[0])
        self.full = (1 << len(self.psne)) - 1
        self.by_player = [0] * self.n
        for r, x in enumerate(self.psne):
            for i, a in enumerate(x):
                if a == action:
                    self.by_player[i] |= 1 << r

    def mask_of(self, rows: Sequence[JointAction]) -> int:
        index = {x: r for r, x in enumerate(self.psne)}
        m = 0
        for x in rows:
            m |= 1 << index[tuple(x)]
        return m

    def consistent(self, players: Sequence[int]) -> int:
        m = self.full
        for i in players:
            m &= self.by_player[i]
        return m

    def rows(self, mask: int) -> List[JointAction]:
        return [x for r, x in enumerate(self.psne) if mask >> r & 1]


def _check_inputs(psne: Sequence[JointAction], target: Sequence[JointAction]) -> None:
    pool = set(tuple(x) for x in psne)
    stray = [x for x in target if tuple(x) not in pool]
    if stray:
        raise ValidationError(f"{len(stray)} target joint action(s) are not among the PSNE.")


def _minimize(family: _Family, picked: List[int], target: int) -> List[int]:
    """Drop-one pass, latest picks first, repeated until nothing can go."""
    chosen = list(picked)
    changed = True
    while changed:
        changed = False
        for v in reversed(list(chosen)):
            rest = [u for u in chosen if u != v]
            m = family.consistent(rest)
            if m and not m & ~target:
                chosen = rest
                changed = True
    return chosen


def _heuristic(family: _Family, target: int, reachable: int, log: LogFn) -> Tuple[List[int], List[Dict[str, object]]]:
    picked: List[int] = []
    rounds: List[Dict[str, object]] = []
    current = family.full
    while current & ~target:
        scores: Dict[int, Tuple[int, int]] = {}
        for i in range(family.n):
            if i in picked:
                continue
            m = current & family.by_player[i]
            if not m & reachable:
                continue
            scores[i] = (_bits(m & ~target), _bits(m & target))
        if not scores:
            raise InfeasibleError("No player keeps a reachable target PSNE consistent.")
        # fewest extensions outside the target, then most inside, then lowest index
        pick = min(scores, key=lambda i: (scores[i][0], -scores[i][1], i))
        current &= family.by_player[pick]
        picked.append(pick)
        rounds.append(
            {
                "scores": {str(i): s[0] for i, s in sorted(scores.items())},
                "picked": pick,
                "outside": scores[pick][0],
                "inside": scores[pick][1],
            }
        )
        log(f"[INFO] Coalition round {len(rounds)}: picked {pick}, {scores[pick][0]} PSNE outside the target left")
    return picked, rounds


def _exact(family: _Family, target: int, cap: int) -> List[int]:
    validate_cap(family.n, cap, "exact coalition sweep")
    for k in range(family.n + 1):
        best: Optional[Tuple[int, ...]] = None
        best_size = -1
        for s in itertools.combinations(range(family.n), k):
            m = family.consistent(s)
            if m and not m & ~target:
                size = _bits(m)
                if size > best_size:
                    best, best_size = s, size
        if best is not None:
            return list(best)
    raise InfeasibleError("No coalition leaves only target PSNE.")


def _coalition(
    psne: Sequence[JointAction],
    target_rows: Sequence[JointAction],
    action: int,
    exact: bool,
    cap: int,
    log: LogFn,
) -> CoalitionResult:
    if not psne:
        raise InfeasibleError("The game has no PSNE.")
    _check_inputs(psne, target_rows)
    if not target_rows:
        raise InfeasibleError("The target set of PSNE is empty.")
    family = _Family(psne, action)
    target = family.mask_of(target_rows)

    # a target PSNE is reachable when no PSNE outside the target agrees with it wherever it plays `action`
    reachable = 0
    for r, x in enumerate(family.psne):
        if not target >> r & 1:
            continue
        own = [i for i, a in enumerate(x) if a == action]
        if not family.consistent(own) & ~target:
            reachable |= 1 << r
    if not reachable:
        raise InfeasibleError("Every target PSNE is dominated by a PSNE outside the target.")

    if exact:
        picked = _exact(family, target, cap)
        rounds: List[Dict[str, object]] = []
    else:
        picked, rounds = _heuristic(family, target, reachable, log)
        picked = _minimize(family, picked, target)

    cover = family.rows(family.consistent(picked))
    log(f"[OK] Coalition of {len(picked)} player(s) forced to {action:+d}, {len(cover)} PSNE consistent.")
    return CoalitionResult(
        tuple(sorted(picked)), action, cover, len(target_rows), EXACT if exact else HEURISTIC, rounds
    )


def filibuster_breakers(
    game: InfluenceGame,
    psne: Sequence[JointAction],
    cloture: Sequence[JointAction],
    exact: bool = False,
    *,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
    log_fn: Optional[LogFn] = None,
) -> CoalitionResult:
    """
    Smallest set of players whose +1 votes leave only cloture PSNE.

    The heuristic adds the player leaving the fewest PSNE outside the
    cloture set, then drops redundant picks. Exact mode sweeps subsets by
    size and keeps the one with the largest cover.
    """
    if psne and len(psne[0]) != game.n:
        raise ValidationError(f"PSNE have length {len(psne[0])}, expected {game.n}.")
    return _coalition(psne, cloture, 1, exact, cap, log_fn or _noop)


def cloture_preventers(
    game: InfluenceGame,
    psne: Sequence[JointAction],
    cloture: Sequence[JointAction],
    exact: bool = False,
    *,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
    log_fn: Optional[LogFn] = None,
) -> CoalitionResult:
    """Smallest set of players whose -1 votes rule out every cloture PSNE."""
    if psne and len(psne[0]) != game.n:
        raise ValidationError(f"PSNE have length {len(psne[0])}, expected {game.n}.")
    blocked = set(tuple(x) for x in cloture)
    _check_inputs(psne, cloture)
    rest = [tuple(x) for x in psne if tuple(x) not in blocked]
    return _coalition(psne, rest, -1, exact, cap, log_fn or _noop)
