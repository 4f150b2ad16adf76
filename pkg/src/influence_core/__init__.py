from .models import (
    EXACT,
    GOAL_VARIANTS,
    GREEDY,
    MAX_ADOPTERS,
    MIN_CARDINALITY,
    PREFERENCE_VARIANTS,
    TARGET_PSNE,
    WEIGHTED_ADOPTERS,
    WEIGHTED_NODES,
    GameHypergraph,
    GoalSpec,
    HittingSetInstance,
    InfluenceResult,
    SetPreference,
    TieDag,
)
from .hypergraph import (
    build_hypergraph,
    complement_edges,
    consistent_edges,
    hitting_set_instance,
    hypergraph_from_hitting_set,
    is_hitting_set,
    players_to_nodes,
)
from .counting import CountFn, ExtensionCounter, HypergraphCounter
from .greedy import (
    DEFAULT_TIE_WIDTH,
    candidate_positions,
    explore_tie_dag,
    greedy_most_influential,
    is_maximal,
    optimal_psne_set,
)
from .exact import exact_most_influential, feasible_sets_of_size, is_feasible_set
from .result_io import dumps_result, read_goal, read_preference, read_vector, write_dag, write_result

__all__ = [
    "TARGET_PSNE",
    "MAX_ADOPTERS",
    "WEIGHTED_ADOPTERS",
    "GOAL_VARIANTS",
    "MIN_CARDINALITY",
    "WEIGHTED_NODES",
    "PREFERENCE_VARIANTS",
    "GREEDY",
    "EXACT",
    "GameHypergraph",
    "GoalSpec",
    "SetPreference",
    "HittingSetInstance",
    "InfluenceResult",
    "TieDag",
    "build_hypergraph",
    "hitting_set_instance",
    "complement_edges",
    "is_hitting_set",
    "players_to_nodes",
    "hypergraph_from_hitting_set",
    "consistent_edges",
    "CountFn",
    "HypergraphCounter",
    "ExtensionCounter",
    "DEFAULT_TIE_WIDTH",
    "optimal_psne_set",
    "candidate_positions",
    "is_maximal",
    "greedy_most_influential",
    "explore_tie_dag",
    "exact_most_influential",
    "is_feasible_set",
    "feasible_sets_of_size",
    "dumps_result",
    "write_result",
    "write_dag",
    "read_vector",
    "read_goal",
    "read_preference",
]
