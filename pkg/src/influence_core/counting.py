from __future__ import annotations

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.game_core import InfluenceGame, JointAction, PartialAssignment, ValidationError
from src.solver_core import SearchConfig, count_psne_extensions

CountFn = Callable[[PartialAssignment], int]


class HypergraphCounter:
    """
    Degree counting over materialized PSNE.

    Every (player, action) node keeps a bitmask of the PSNE containing it;
    the count for a partial assignment is the popcount of the AND.
    """

    def __init__(self, psne: Sequence[JointAction]):
        if not psne:
            raise ValidationError("Hypergraph counting needs at least one PSNE.")
        self.psne: List[JointAction] = [tuple(x) for x in psne]
        self.n = len(self.psne[0])
        self.full = (1 << len(self.psne)) - 1
        self._masks: Dict[Tuple[int, int], int] = {}
        for r, x in enumerate(self.psne):
            if len(x) != self.n:
                raise ValidationError("PSNE have inconsistent lengths.")
            for i, a in enumerate(x):
                key = (i, a)
                self._masks[key] = self._masks.get(key, 0) | (1 << r)

    def mask(self, partial: PartialAssignment) -> int:
        m = self.full
        for i, a in partial.items():
            if not (0 <= i < self.n):
                raise ValidationError(f"Player index {i} out of range 0..{self.n - 1}.")
            m &= self._masks.get((i, a), 0)
            if not m:
                break
        return m

    def __call__(self, partial: PartialAssignment) -> int:
        return bin(self.mask(partial)).count("1")

    def consistent(self, partial: PartialAssignment) -> List[JointAction]:
        m = self.mask(partial)
        return [x for r, x in enumerate(self.psne) if m >> r & 1]


class ExtensionCounter:
    """Live PSNE-extension counting by backtracking search; no PSNE list needed."""

    def __init__(self, game: InfluenceGame, cfg: Optional[SearchConfig] = None):
        self.game = game
        self.cfg = cfg or SearchConfig()

    def __call__(self, partial: PartialAssignment) -> int:
        return count_psne_extensions(self.game, partial, self.cfg)
