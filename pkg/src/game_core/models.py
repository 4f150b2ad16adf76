from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .constants import ACTIONS, DENSE_LIMIT, DOM_BOTH, DOM_MINUS, DOM_PLUS, MINUS, PLUS
from .errors import ValidationError

JointAction = Tuple[int, ...]
Arc = Tuple[int, int, float]  # (source j, target i, w_ji)


@dataclass(frozen=True)
class InfluenceGame:
    """
    Linear influence game.

    Player i's influence function is f_i(x) = sum_{j != i} w_ji * x_j - b_i.
    Arcs are stored as (j, i, w_ji) with zero weights dropped; games up to
    DENSE_LIMIT players also keep a dense matrix where weights[j, i] = w_ji.

    Instances are immutable and safe to share between worker threads.
    """

    n: int
    arcs: Tuple[Arc, ...]
    thresholds: Tuple[float, ...]
    labels: Tuple[str, ...] = ()
    tie_epsilon: float = 0.0

    _in: Tuple[Tuple[Tuple[int, float], ...], ...] = field(init=False, repr=False, compare=False)
    _out: Tuple[Tuple[Tuple[int, float], ...], ...] = field(init=False, repr=False, compare=False)
    _in_map: Tuple[Dict[int, float], ...] = field(init=False, repr=False, compare=False)
    _dense: Optional[np.ndarray] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = int(self.n)
        if n < 1:
            raise ValidationError(f"A game needs at least one player (n={n}).")
        if len(self.thresholds) != n:
            raise ValidationError(f"thresholds has length {len(self.thresholds)}, expected {n}.")
        if self.tie_epsilon < 0:
            raise ValidationError(f"tie_epsilon must be >= 0 (got {self.tie_epsilon}).")
        labels = tuple(str(s) for s in self.labels) if self.labels else tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise ValidationError(f"labels has length {len(labels)}, expected {n}.")

        seen: Dict[Tuple[int, int], float] = {}
        for arc in self.arcs:
            j, i, w = int(arc[0]), int(arc[1]), float(arc[2])
            if not (0 <= j < n and 0 <= i < n):
                raise ValidationError(f"Arc ({j}, {i}) references a player outside 0..{n - 1}.")
            if j == i:
                if w != 0.0:
                    raise ValidationError(f"Self-arc on player {i} with nonzero weight {w}.")
                continue
            if (j, i) in seen:
                raise ValidationError(f"Duplicate arc ({j}, {i}).")
            if w != 0.0:
                seen[(j, i)] = w

        arcs = tuple(sorted((j, i, w) for (j, i), w in seen.items()))
        ins: List[List[Tuple[int, float]]] = [[] for _ in range(n)]
        outs: List[List[Tuple[int, float]]] = [[] for _ in range(n)]
        for j, i, w in arcs:
            ins[i].append((j, w))
            outs[j].append((i, w))
        for row in ins:
            row.sort()

        dense = None
        if n <= DENSE_LIMIT:
            dense = np.zeros((n, n), dtype=float)
            for j, i, w in arcs:
                dense[j, i] = w
            dense.setflags(write=False)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "thresholds", tuple(float(b) for b in self.thresholds))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "tie_epsilon", float(self.tie_epsilon))
        object.__setattr__(self, "_in", tuple(tuple(r) for r in ins))
        object.__setattr__(self, "_out", tuple(tuple(r) for r in outs))
        object.__setattr__(self, "_in_map", tuple(dict(r) for r in ins))
        object.__setattr__(self, "_dense", dense)

    # -------------------------
    # Constructors
    # -------------------------

    @classmethod
    def from_matrix(
        cls,
        weights: Sequence[Sequence[float]],
        thresholds: Sequence[float],
        *,
        labels: Optional[Sequence[str]] = None,
        tie_epsilon: float = 0.0,
    ) -> "InfluenceGame":
        """weights[j][i] is the influence of j on i; the diagonal must be zero."""
        W = np.asarray(weights, dtype=float)
        n = len(thresholds)
        if W.shape != (n, n):
            raise ValidationError(f"Weight matrix has shape {W.shape}, expected ({n}, {n}).")
        if np.any(np.diag(W) != 0.0):
            raise ValidationError("Weight matrix diagonal must be exactly 0.")
        js, is_ = np.nonzero(W)
        arcs = [(int(j), int(i), float(W[j, i])) for j, i in zip(js, is_)]
        return cls(n=n, arcs=tuple(arcs), thresholds=tuple(thresholds),
                   labels=tuple(labels or ()), tie_epsilon=tie_epsilon)

    @classmethod
    def from_arcs(
        cls,
        n: int,
        arcs: Iterable[Sequence[float]],
        thresholds: Optional[Sequence[float]] = None,
        *,
        labels: Optional[Sequence[str]] = None,
        tie_epsilon: float = 0.0,
    ) -> "InfluenceGame":
        b = tuple(thresholds) if thresholds is not None else (0.0,) * int(n)
        return cls(n=int(n), arcs=tuple((a[0], a[1], a[2]) for a in arcs), thresholds=b,
                   labels=tuple(labels or ()), tie_epsilon=tie_epsilon)

    def with_thresholds(self, thresholds: Sequence[float]) -> "InfluenceGame":
        return InfluenceGame(self.n, self.arcs, tuple(thresholds), self.labels, self.tie_epsilon)

    def with_tie_epsilon(self, tie_epsilon: float) -> "InfluenceGame":
        return InfluenceGame(self.n, self.arcs, self.thresholds, self.labels, tie_epsilon)

    # -------------------------
    # Accessors
    # -------------------------

    @property
    def weights(self) -> np.ndarray:
        """Dense read-only n x n matrix, weights[j, i] = w_ji."""
        if self._dense is not None:
            return self._dense
        W = np.zeros((self.n, self.n), dtype=float)
        for j, i, w in self.arcs:
            W[j, i] = w
        W.setflags(write=False)
        return W

    @property
    def b(self) -> np.ndarray:
        return np.asarray(self.thresholds, dtype=float)

    def weight(self, j: int, i: int) -> float:
        return self._in_map[i].get(j, 0.0)

    def in_arcs(self, i: int) -> Tuple[Tuple[int, float], ...]:
        """Incoming arcs of i as (source, weight), sorted by source."""
        return self._in[i]

    def out_arcs(self, j: int) -> Tuple[Tuple[int, float], ...]:
        return self._out[j]

    def out_degree(self, j: int) -> int:
        return len(self._out[j])

    def neighbors(self, i: int) -> FrozenSet[int]:
        """Players linked to i by an arc in either direction."""
        return frozenset(j for j, _ in self._in[i]) | frozenset(k for k, _ in self._out[i])

    def undirected_edges(self) -> List[Tuple[int, int]]:
        return sorted({(min(j, i), max(j, i)) for j, i, _ in self.arcs})

    def all_nonnegative(self) -> bool:
        return all(w >= 0.0 for _, _, w in self.arcs)

    def label(self, i: int) -> str:
        return self.labels[i]


@dataclass(frozen=True)
class PartialAssignment:
    """Actions fixed for a subset of players, in the order they were fixed."""

    order: Tuple[int, ...] = ()
    actions: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.order) != len(self.actions):
            raise ValidationError("Partial assignment order and actions differ in length.")
        if len(set(self.order)) != len(self.order):
            raise ValidationError(f"Partial assignment repeats a player: {list(self.order)}")
        for a in self.actions:
            if a not in ACTIONS:
                raise ValidationError(f"Assigned action must be -1 or +1 (got {a}).")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "PartialAssignment":
        pairs = [(int(i), int(a)) for i, a in pairs]
        return cls(tuple(i for i, _ in pairs), tuple(a for _, a in pairs))

    @classmethod
    def from_mapping(cls, assigned: Mapping[int, int]) -> "PartialAssignment":
        return cls.from_pairs(sorted(assigned.items()))

    @property
    def assigned(self) -> Dict[int, int]:
        return dict(zip(self.order, self.actions))

    def extend(self, i: int, action: int) -> "PartialAssignment":
        return PartialAssignment(self.order + (int(i),), self.actions + (int(action),))

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(zip(self.order, self.actions))

    def agrees(self, x: Sequence[int]) -> bool:
        return all(x[i] == a for i, a in zip(self.order, self.actions))

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, i: object) -> bool:
        return i in self.order


_MASK_TO_SET = {
    DOM_MINUS: frozenset({MINUS}),
    DOM_PLUS: frozenset({PLUS}),
    DOM_BOTH: frozenset({MINUS, PLUS}),
}


@dataclass(frozen=True)
class DomainVector:
    """Allowed actions per player, or the Contradiction state."""

    domains: Tuple[FrozenSet[int], ...]
    contradiction: bool = False

    def __post_init__(self) -> None:
        if not self.contradiction:
            for i, d in enumerate(self.domains):
                if not d or not d <= {MINUS, PLUS}:
                    raise ValidationError(f"Domain of player {i} must be a nonempty subset of {{-1, +1}}.")

    @classmethod
    def full(cls, n: int) -> "DomainVector":
        return cls(tuple(_MASK_TO_SET[DOM_BOTH] for _ in range(n)))

    @classmethod
    def contradicted(cls, n: int) -> "DomainVector":
        return cls(tuple(frozenset() for _ in range(n)), contradiction=True)

    @classmethod
    def from_partial(cls, n: int, partial: PartialAssignment) -> "DomainVector":
        doms = [_MASK_TO_SET[DOM_BOTH]] * n
        for i, a in partial.items():
            doms[i] = frozenset({a})
        return cls(tuple(doms))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "DomainVector":
        if any(m == 0 for m in masks):
            return cls.contradicted(len(masks))
        return cls(tuple(_MASK_TO_SET[m] for m in masks))

    def masks(self) -> List[int]:
        if self.contradiction:
            return [0] * len(self.domains)
        return [(DOM_MINUS if MINUS in d else 0) | (DOM_PLUS if PLUS in d else 0) for d in self.domains]

    def __len__(self) -> int:
        return len(self.domains)
