from __future__ import annotations

from typing import TYPE_CHECKING, Optional

from src.game_core import ValidationError

if TYPE_CHECKING:
    from .settings import Settings


def _positive_int(name: str, value: object) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValidationError(f"{name} must be a positive integer (got {value!r}).")


def _positive_number(name: str, value: object) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
        raise ValidationError(f"{name} must be > 0 (got {value!r}).")


def validate_settings(s: "Settings") -> None:
    if isinstance(s.tie_epsilon, bool) or not isinstance(s.tie_epsilon, (int, float)) or s.tie_epsilon < 0:
        raise ValidationError(f"tie_epsilon must be >= 0 (got {s.tie_epsilon!r}).")
    for name in ("brute_force_cap", "exact_cap", "threads", "dynamics_round_factor", "tie_width",
                 "dnc_leaf_size", "learn_max_iters"):
        _positive_int(name, getattr(s, name))
    for name in ("potential_tolerance", "l2_lambda", "learn_tolerance"):
        _positive_number(name, getattr(s, name))
    if s.search_budget is not None:
        _positive_int("search_budget", s.search_budget)
    if not isinstance(s.use_propagation, bool):
        raise ValidationError(f"use_propagation must be true or false (got {s.use_propagation!r}).")


def validate_seed(seed: Optional[int]) -> int:
    if seed is None:
        return 0
    if int(seed) < 0:
        raise ValidationError(f"seed must be >= 0 (got {seed}).")
    return int(seed)
