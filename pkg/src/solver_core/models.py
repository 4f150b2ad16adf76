from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from src.game_core import ValidationError

AUTO = "auto"
BACKTRACK = "backtrack"
TREE = "tree"
SUPERMODULAR = "supermodular"
DNC = "dnc"
METHODS = (AUTO, BACKTRACK, TREE, SUPERMODULAR, DNC)

ALL_MINUS_ONE = -1
ALL_PLUS_ONE = 1


@dataclass(frozen=True)
class SearchConfig:
    max_nodes: Optional[int] = None
    parallel: bool = False
    count_only: bool = False
    collect_stats: bool = True
    use_propagation: bool = True
    threads: int = 1
    # stop once this many PSNE are found; the search then runs on one thread
    limit: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValidationError(f"max_nodes must be >= 1 when given (got {self.max_nodes}).")
        if self.limit is not None and self.limit < 1:
            raise ValidationError(f"limit must be >= 1 when given (got {self.limit}).")
        if self.threads < 1:
            raise ValidationError(f"threads must be >= 1 (got {self.threads}).")


@dataclass
class SearchStats:
    nodes_visited: int = 0
    psne_found: int = 0
    wall_time: float = 0.0  # seconds

    def merged(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            self.nodes_visited + other.nodes_visited,
            self.psne_found + other.psne_found,
            self.wall_time + other.wall_time,
        )

    def to_dict(self) -> Dict[str, int]:
        return {
            "nodes_visited": self.nodes_visited,
            "psne_found": self.psne_found,
            "wall_time_ms": int(round(self.wall_time * 1000)),
        }


@dataclass(frozen=True)
class Separator:
    """Vertex separator S plus the node sets it splits apart."""

    vertex_set: FrozenSet[int]
    components: Tuple[FrozenSet[int], ...] = field(default_factory=tuple)
    dropped: Tuple[Tuple[int, int], ...] = ()  # cut edges left uncovered
