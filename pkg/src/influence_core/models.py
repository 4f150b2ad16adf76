from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.game_core import JointAction, ValidationError
from src.game_core.constants import ACTIONS

Node = Tuple[int, int]  # (player, action)

TARGET_PSNE = "target_psne"
MAX_ADOPTERS = "max_adopters"
WEIGHTED_ADOPTERS = "weighted_adopters"
GOAL_VARIANTS = (TARGET_PSNE, MAX_ADOPTERS, WEIGHTED_ADOPTERS)

MIN_CARDINALITY = "min_cardinality"
WEIGHTED_NODES = "weighted_nodes"
PREFERENCE_VARIANTS = (MIN_CARDINALITY, WEIGHTED_NODES)

GREEDY = "greedy"
EXACT = "exact"


def _as_joint_action(x: Sequence[int], n: Optional[int] = None) -> JointAction:
    out = tuple(int(a) for a in x)
    if n is not None and len(out) != n:
        raise ValidationError(f"Joint action has length {len(out)}, expected {n}.")
    for a in out:
        if a not in ACTIONS:
            raise ValidationError(f"Actions must be -1 or +1 (got {a}).")
    return out


@dataclass(frozen=True)
class GameHypergraph:
    """
    One hyperedge {(i, x_i)} per PSNE x over the 2n (player, action) nodes.

    Hyperedges are stored as joint actions; hyperedges[goal_index] is the
    goal hyperedge.
    """

    num_players: int
    hyperedges: Tuple[JointAction, ...]
    goal_index: int = 0

    def __post_init__(self) -> None:
        edges = tuple(_as_joint_action(e, self.num_players) for e in self.hyperedges)
        if len(set(edges)) != len(edges):
            raise ValidationError("Hyperedges must be distinct.")
        if not (0 <= self.goal_index < len(edges)):
            raise ValidationError(f"goal_index {self.goal_index} out of range for {len(edges)} hyperedges.")
        object.__setattr__(self, "hyperedges", edges)

    @classmethod
    def from_psne(cls, psne: Iterable[Sequence[int]], goal: Sequence[int]) -> "GameHypergraph":
        edges = [tuple(int(a) for a in x) for x in psne]
        goal = tuple(int(a) for a in goal)
        if goal not in edges:
            raise ValidationError("The goal joint action is not among the listed PSNE.")
        n = len(goal)
        return cls(n, tuple(edges), edges.index(goal))

    @property
    def goal(self) -> JointAction:
        return self.hyperedges[self.goal_index]

    def goal_nodes(self, players: Optional[Iterable[int]] = None) -> FrozenSet[Node]:
        x = self.goal
        idx = range(self.num_players) if players is None else players
        return frozenset((i, x[i]) for i in idx)

    def edge_nodes(self, k: int) -> FrozenSet[Node]:
        return frozenset(enumerate(self.hyperedges[k]))

    def degree(self, node: Node) -> int:
        i, a = node
        return sum(1 for e in self.hyperedges if e[i] == a)


@dataclass(frozen=True)
class HittingSetInstance:
    """Ground set plus the sets a feasible selection has to hit."""

    universe: FrozenSet[Node]
    edges: Tuple[FrozenSet[Node], ...]


@dataclass(frozen=True)
class GoalSpec:
    variant: str
    target: JointAction = ()
    weights: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.variant not in GOAL_VARIANTS:
            raise ValidationError(f"Unknown goal variant '{self.variant}'.")
        if self.variant == TARGET_PSNE:
            if not self.target:
                raise ValidationError("A target goal needs its joint action.")
            object.__setattr__(self, "target", _as_joint_action(self.target))
        if self.variant == WEIGHTED_ADOPTERS:
            if not self.weights:
                raise ValidationError("A weighted-adopters goal needs one weight per player.")
            object.__setattr__(self, "weights", tuple(float(t) for t in self.weights))

    @classmethod
    def target_psne(cls, x: Sequence[int]) -> "GoalSpec":
        return cls(TARGET_PSNE, target=tuple(x))

    @classmethod
    def max_adopters(cls) -> "GoalSpec":
        return cls(MAX_ADOPTERS)

    @classmethod
    def weighted_adopters(cls, t: Sequence[float]) -> "GoalSpec":
        return cls(WEIGHTED_ADOPTERS, weights=tuple(t))

    @property
    def depends_on_set(self) -> bool:
        return self.variant == WEIGHTED_ADOPTERS

    def check_players(self, n: int) -> None:
        if self.variant == TARGET_PSNE and len(self.target) != n:
            raise ValidationError(f"Target has length {len(self.target)}, expected {n}.")
        if self.variant == WEIGHTED_ADOPTERS and len(self.weights) != n:
            raise ValidationError(f"Goal weights have length {len(self.weights)}, expected {n}.")

    def value(self, x: JointAction, selected: FrozenSet[int] = frozenset()) -> float:
        """g(x, S)."""
        if self.variant == TARGET_PSNE:
            return 1.0 if tuple(x) == self.target else 0.0
        if self.variant == MAX_ADOPTERS:
            return float(sum(1 for a in x if a > 0))
        return sum(t * a if i in selected else -t * a for i, (t, a) in enumerate(zip(self.weights, x)))

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"variant": self.variant}
        if self.target:
            out["target"] = list(self.target)
        if self.weights:
            out["weights"] = list(self.weights)
        return out


@dataclass(frozen=True)
class SetPreference:
    variant: str = MIN_CARDINALITY
    weights: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.variant not in PREFERENCE_VARIANTS:
            raise ValidationError(f"Unknown set preference '{self.variant}'.")
        if self.variant == WEIGHTED_NODES and not self.weights:
            raise ValidationError("A weighted-nodes preference needs one weight per player.")
        object.__setattr__(self, "weights", tuple(float(v) for v in self.weights))

    @classmethod
    def min_cardinality(cls) -> "SetPreference":
        return cls(MIN_CARDINALITY)

    @classmethod
    def weighted_nodes(cls, v: Sequence[float]) -> "SetPreference":
        return cls(WEIGHTED_NODES, tuple(v))

    def check_players(self, n: int) -> None:
        if self.variant == WEIGHTED_NODES and len(self.weights) != n:
            raise ValidationError(f"Preference weights have length {len(self.weights)}, expected {n}.")

    def value(self, selected: Iterable[int], n: int) -> float:
        """h(S); larger is preferred."""
        chosen = set(selected)
        if self.variant == MIN_CARDINALITY:
            return -float(len(chosen))
        return sum(v if i in chosen else -v for i, v in enumerate(self.weights[:n]))

    def tie_key(self, i: int) -> Tuple[float, int]:
        """Greedy tie-break among least-degree candidates: higher v first, then lower index."""
        if self.variant == WEIGHTED_NODES:
            return (-self.weights[i], i)
        return (0.0, i)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"variant": self.variant}
        if self.weights:
            out["weights"] = list(self.weights)
        return out


@dataclass
class TieDag:
    """Option dag of tied greedy picks. Node 0 is the empty selection."""

    nodes: List[Dict[str, Any]] = field(default_factory=list)
    edges: List[Tuple[int, int, int]] = field(default_factory=list)  # (from, to, player)
    truncated: bool = False

    def solutions(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(node["selected"]) for node in self.nodes if node["terminal"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nodes": [dict(node) for node in self.nodes],
            "edges": [list(e) for e in self.edges],
            "truncated": self.truncated,
        }


@dataclass
class InfluenceResult:
    selected: Tuple[int, ...]
    actions: Tuple[int, ...]
    goal: JointAction
    consistent_psne: int = 1
    method: str = GREEDY
    rounds: List[Dict[str, Any]] = field(default_factory=list)
    dag: Optional[TieDag] = None

    @property
    def size(self) -> int:
        return len(self.selected)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "selected": list(self.selected),
            "actions": list(self.actions),
            "consistent_psne": self.consistent_psne,
            "goal": list(self.goal),
            "method": self.method,
            "rounds": [dict(r) for r in self.rounds],
        }
        if self.dag is not None:
            out["dag"] = self.dag.to_dict()
        return out
