from .models import (
    ALL_MINUS_ONE,
    ALL_PLUS_ONE,
    AUTO,
    BACKTRACK,
    DNC,
    METHODS,
    SUPERMODULAR,
    TREE,
    SearchConfig,
    SearchStats,
    Separator,
)
from .stats_store import StatsStore, VisitBudget
from .graphs import is_forest_game, undirected_graph
from .propagation import influence_bounds, propagate, propagate_masks
from .backtracking import count_psne_extensions, enumerate_psne, selection_order
from .tree_solver import solve_tree
from .supermodular import solve_supermodular, supermodular_extremes
from .separator import find_vertex_separator, is_valid_separator
from .divide_conquer import build_subgame, solve_divide_conquer, solve_divide_conquer_with_stats
from .psne_io import dumps_stats, format_psne, parse_psne, read_psne, write_psne

__all__ = [
    "ALL_MINUS_ONE",
    "ALL_PLUS_ONE",
    "AUTO",
    "BACKTRACK",
    "TREE",
    "SUPERMODULAR",
    "DNC",
    "METHODS",
    "SearchConfig",
    "SearchStats",
    "Separator",
    "StatsStore",
    "VisitBudget",
    "undirected_graph",
    "is_forest_game",
    "influence_bounds",
    "propagate",
    "propagate_masks",
    "enumerate_psne",
    "count_psne_extensions",
    "selection_order",
    "solve_tree",
    "solve_supermodular",
    "supermodular_extremes",
    "find_vertex_separator",
    "is_valid_separator",
    "build_subgame",
    "solve_divide_conquer",
    "solve_divide_conquer_with_stats",
    "format_psne",
    "write_psne",
    "parse_psne",
    "read_psne",
    "dumps_stats",
]
