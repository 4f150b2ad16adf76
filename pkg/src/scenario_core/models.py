from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from src.game_core import JointAction, ValidationError

FIXED_POINT = "fixed_point"
CYCLE = "cycle"

HEURISTIC = "heuristic"
EXACT = "exact"

BREAK = "break"
PREVENT = "prevent"
DIFFUSION = "diffusion"
SCENARIO_MODES = (BREAK, PREVENT, DIFFUSION)

DEFAULT_ROUND_FACTOR = 4
DEFAULT_MAX_SUBSETS = 1_000_000


@dataclass(frozen=True)
class ClotureSpec:
    """Quota of +1 votes, optionally also requiring a strict majority of a party at +1."""

    quota: int
    party: FrozenSet[int] = frozenset()

    def __post_init__(self) -> None:
        if int(self.quota) < 1:
            raise ValidationError(f"quota must be >= 1 (got {self.quota}).")
        object.__setattr__(self, "quota", int(self.quota))
        object.__setattr__(self, "party", frozenset(int(i) for i in self.party))

    def check_players(self, n: int) -> None:
        bad = sorted(i for i in self.party if not (0 <= i < n))
        if bad:
            raise ValidationError(f"Party members {bad} are outside 0..{n - 1}.")

    def to_dict(self) -> Dict[str, Any]:
        return {"quota": self.quota, "party": sorted(self.party)}


@dataclass(frozen=True)
class DynamicsOutcome:
    """
    Where synchronous best-response dynamics ended up.

    For a fixed point `state` is the fixed point and `rounds` the number of
    update rounds it took. For a cycle `state` is the first repeated state,
    `period` its cycle length and `first_repeat_round` the round at which it
    showed up again.
    """

    kind: str
    state: JointAction
    rounds: int = 0
    period: int = 0
    first_repeat_round: int = 0
    stable: bool = False

    def __post_init__(self) -> None:
        if self.kind not in (FIXED_POINT, CYCLE):
            raise ValidationError(f"Unknown dynamics outcome '{self.kind}'.")
        if self.kind == CYCLE and self.period < 2:
            raise ValidationError(f"A cycle has period >= 2 (got {self.period}).")
        if self.rounds < 0:
            raise ValidationError("rounds must be >= 0.")

    @property
    def is_fixed_point(self) -> bool:
        return self.kind == FIXED_POINT

    def adopters(self) -> int:
        return sum(1 for a in self.state if a > 0)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind, "state": list(self.state), "stable": self.stable}
        if self.kind == FIXED_POINT:
            out["rounds"] = self.rounds
        else:
            out["period"] = self.period
            out["first_repeat_round"] = self.first_repeat_round
        return out


@dataclass
class CoalitionResult:
    """Players forced to `action` and the PSNE still consistent with them."""

    selected: Tuple[int, ...]
    action: int
    cover: List[JointAction]
    target_size: int
    method: str = HEURISTIC
    rounds: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "selected": list(self.selected),
            "action": self.action,
            "cover_size": len(self.cover),
            "cover": [list(x) for x in self.cover],
            "target_size": self.target_size,
            "method": self.method,
            "rounds": [dict(r) for r in self.rounds],
        }


@dataclass
class DiffusionResult:
    selected: List[int]
    final: JointAction
    rounds: List[Dict[str, Any]] = field(default_factory=list)
    dropped: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "selected": list(self.selected),
            "final": list(self.final),
            "dropped": list(self.dropped),
            "rounds": [dict(r) for r in self.rounds],
        }


@dataclass(frozen=True)
class DiffusionHit:
    forced: Tuple[int, ...]
    outcome: DynamicsOutcome
    stable: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"forced": list(self.forced), "stable": self.stable, "outcome": self.outcome.to_dict()}


@dataclass
class ScenarioReport:
    mode: str
    spec: ClotureSpec
    cloture_count: int = 0
    coalition: Optional[CoalitionResult] = None
    hits: List[DiffusionHit] = field(default_factory=list)
    spread: Optional[DiffusionResult] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"mode": self.mode, "spec": self.spec.to_dict(), "cloture_count": self.cloture_count}
        if self.coalition is not None:
            out["coalition"] = self.coalition.to_dict()
        if self.mode == DIFFUSION:
            out["hits"] = [h.to_dict() for h in self.hits]
            out["stable_hits"] = sum(1 for h in self.hits if h.stable)
        if self.spread is not None:
            out["spread"] = self.spread.to_dict()
        return out
