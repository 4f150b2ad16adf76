from .models import (
    BREAK,
    CYCLE,
    DEFAULT_MAX_SUBSETS,
    DEFAULT_ROUND_FACTOR,
    DIFFUSION,
    EXACT,
    FIXED_POINT,
    HEURISTIC,
    PREVENT,
    SCENARIO_MODES,
    ClotureSpec,
    CoalitionResult,
    DiffusionHit,
    DiffusionResult,
    DynamicsOutcome,
    ScenarioReport,
)
from .cloture import meets_cloture, party_majority, stable_cloture_set
from .coalitions import cloture_preventers, dominates, filibuster_breakers
from .dynamics import best_response_dynamics, step
from .diffusion import diffusion_filibuster, diffusion_most_influential, initial_state

__all__ = [
    "FIXED_POINT",
    "CYCLE",
    "HEURISTIC",
    "EXACT",
    "BREAK",
    "PREVENT",
    "DIFFUSION",
    "SCENARIO_MODES",
    "DEFAULT_ROUND_FACTOR",
    "DEFAULT_MAX_SUBSETS",
    "ClotureSpec",
    "DynamicsOutcome",
    "CoalitionResult",
    "DiffusionResult",
    "DiffusionHit",
    "ScenarioReport",
    "party_majority",
    "meets_cloture",
    "stable_cloture_set",
    "dominates",
    "filibuster_breakers",
    "cloture_preventers",
    "step",
    "best_response_dynamics",
    "initial_state",
    "diffusion_most_influential",
    "diffusion_filibuster",
]
