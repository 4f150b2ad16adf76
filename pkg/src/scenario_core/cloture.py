from __future__ import annotations

from typing import List, Sequence

from src.game_core import JointAction

from .models import ClotureSpec


def party_majority(x: JointAction, party) -> bool:
    """Strictly more than half of the party at +1; an even split fails."""
    if not party:
        return True
    yes = sum(1 for i in party if x[i] > 0)
    return 2 * yes > len(party)


def meets_cloture(x: JointAction, spec: ClotureSpec) -> bool:
    return sum(1 for a in x if a > 0) >= spec.quota and party_majority(x, spec.party)


def stable_cloture_set(psne: Sequence[JointAction], spec: ClotureSpec) -> List[JointAction]:
    """The PSNE that reach the quota (and the party majority, when a party is given)."""
    if psne:
        spec.check_players(len(psne[0]))
    return [tuple(x) for x in psne if meets_cloture(x, spec)]
