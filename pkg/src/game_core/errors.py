from __future__ import annotations

from typing import Any, List, Optional


class LigError(Exception):
    """Base exception for every LIG package."""


class ValidationError(LigError):
    """Input is malformed or violates a precondition of the requested operation."""


class CapExceededError(ValidationError):
    """A brute-force or combinatorial size cap was exceeded."""


class NotApplicableError(ValidationError):
    """The requested method does not apply to this game."""


class InfeasibleError(LigError):
    """No feasible set, coalition or diffusion exists for the request."""

    def __init__(self, message: str, *, best: Any = None):
        super().__init__(message)
        self.best = best


class BudgetExhaustedError(LigError):
    """
    A search or dynamics budget ran out.

    Carries whatever was found before the cut-off so callers can still
    report partial results.
    """

    def __init__(self, message: str, *, partial: Optional[List[Any]] = None, stats: Any = None):
        super().__init__(message)
        self.partial = list(partial or [])
        self.stats = stats
