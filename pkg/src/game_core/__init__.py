from .constants import ACTIONS, DEFAULT_BRUTE_FORCE_CAP, MINUS, PLUS
from .errors import (
    BudgetExhaustedError,
    CapExceededError,
    InfeasibleError,
    LigError,
    NotApplicableError,
    ValidationError,
)
from .models import Arc, DomainVector, InfluenceGame, JointAction, PartialAssignment
from .payoffs import best_responses, influence, influence_vector, is_psne, payoff, unhappy_players
from .oracles import brute_force_extension_count, brute_force_extensions, brute_force_psne
from .game_io import dumps_game, game_from_dict, game_to_dict, read_game, write_game
from .fixtures import load_supreme_court, supreme_court_from_table, five_four_outcome

__all__ = [
    "ACTIONS",
    "DEFAULT_BRUTE_FORCE_CAP",
    "MINUS",
    "PLUS",
    "LigError",
    "ValidationError",
    "CapExceededError",
    "NotApplicableError",
    "InfeasibleError",
    "BudgetExhaustedError",
    "Arc",
    "InfluenceGame",
    "JointAction",
    "PartialAssignment",
    "DomainVector",
    "influence",
    "influence_vector",
    "payoff",
    "best_responses",
    "is_psne",
    "unhappy_players",
    "brute_force_psne",
    "brute_force_extension_count",
    "brute_force_extensions",
    "game_to_dict",
    "game_from_dict",
    "dumps_game",
    "read_game",
    "write_game",
    "load_supreme_court",
    "supreme_court_from_table",
    "five_four_outcome",
]
