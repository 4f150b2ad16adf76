from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.game_core import JointAction, ValidationError
from src.game_core.validators import validate_probability

ERDOS_RENYI = "erdos"
UNIFORM_RANDOM = "uniform"
PREF_ATTACH = "prefattach"
FAMILIES = (ERDOS_RENYI, UNIFORM_RANDOM, PREF_ATTACH)

# Vote codes whose sign is taken from the rest of the bench
MAJORITY = 0

# Code -> +1 / -1 / MAJORITY; codes missing from the map are rejected
DEFAULT_CODE_MAP: Dict[int, int] = {1: 1, 2: -1, 3: 1, 4: 1, 5: 1, 6: MAJORITY, 7: MAJORITY}


@dataclass(frozen=True)
class VoteMatrix:
    """Voting instances over a fixed roster, one +/-1 action per player."""

    instances: Tuple[JointAction, ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(a) for a in row) for row in self.instances)
        if not rows:
            raise ValidationError("A vote matrix needs at least one instance.")
        n = len(rows[0])
        for r, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"Instance {r} has {len(row)} votes, expected {n}.")
            bad = [a for a in row if a not in (-1, 1)]
            if bad:
                raise ValidationError(f"Instance {r} holds non +/-1 votes: {bad}.")
        labels = tuple(str(s) for s in self.labels) if self.labels else tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise ValidationError(f"labels has length {len(labels)}, expected {n}.")
        object.__setattr__(self, "instances", rows)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.instances[0])

    def __len__(self) -> int:
        return len(self.instances)


@dataclass(frozen=True)
class LearnConfig:
    """Per-player L2-regularized logistic regression settings."""

    l2_lambda: float = 0.1
    max_iters: int = 5000
    tolerance: float = 1e-8
    step_init: float = 1.0
    step_shrink: float = 0.5
    armijo_c: float = 1e-4

    def __post_init__(self) -> None:
        if not self.l2_lambda > 0:
            raise ValidationError(f"l2_lambda must be > 0 (got {self.l2_lambda}).")
        if int(self.max_iters) < 1:
            raise ValidationError(f"max_iters must be >= 1 (got {self.max_iters}).")
        if not self.tolerance > 0:
            raise ValidationError(f"tolerance must be > 0 (got {self.tolerance}).")
        if not self.step_init > 0:
            raise ValidationError(f"step_init must be > 0 (got {self.step_init}).")
        if not (0.0 < self.step_shrink < 1.0):
            raise ValidationError(f"step_shrink must lie in (0, 1) (got {self.step_shrink}).")
        if not (0.0 < self.armijo_c < 1.0):
            raise ValidationError(f"armijo_c must lie in (0, 1) (got {self.armijo_c}).")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class PlayerFit:
    """Outcome of one player's regression."""

    player: int
    weights: Dict[int, float]
    threshold: float
    iterations: int
    grad_norm: float
    converged: bool
    objective: List[float] = field(default_factory=list)


@dataclass(frozen=True)
class GenConfig:
    """
    A generator family plus its parameters.

    erdos uses edge_p, uniform uses arc_p and flip_p, prefattach uses m and
    flip_p.
    """

    family: str
    n: int
    seed: int = 0
    edge_p: float = 0.5
    arc_p: float = 0.5
    flip_p: float = 0.0
    m: int = 3

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValidationError(f"Unknown generator family '{self.family}' (expected one of {', '.join(FAMILIES)}).")
        validate_probability("edge_p", self.edge_p)
        validate_probability("arc_p", self.arc_p)
        validate_probability("flip_p", self.flip_p)
        if int(self.m) < 1:
            raise ValidationError(f"m must be >= 1 (got {self.m}).")
        minimum = 3 if self.family == PREF_ATTACH else 1
        if int(self.n) < minimum:
            raise ValidationError(f"{self.family} games need n >= {minimum} (got {self.n}).")

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"family": self.family, "n": int(self.n), "seed": int(self.seed)}
        if self.family == ERDOS_RENYI:
            out["edge_p"] = self.edge_p
        elif self.family == UNIFORM_RANDOM:
            out.update(arc_p=self.arc_p, flip_p=self.flip_p)
        else:
            out.update(m=int(self.m), flip_p=self.flip_p)
        return out


def check_rows(rows: Sequence[Sequence[int]], n: Optional[int] = None) -> List[JointAction]:
    out = [tuple(int(a) for a in row) for row in rows]
    for r, row in enumerate(out):
        if n is not None and len(row) != n:
            raise ValidationError(f"Instance {r} has {len(row)} votes, expected {n}.")
    return out
