from __future__ import annotations

from src.game_core import BudgetExhaustedError, InfeasibleError, ValidationError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3
EXIT_VALIDATION = 4


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ValidationError):
        return EXIT_VALIDATION
    if isinstance(exc, InfeasibleError):
        return EXIT_INFEASIBLE
    if isinstance(exc, BudgetExhaustedError):
        return EXIT_BUDGET
    return EXIT_ERROR
