from .cli_app import CliApp, main
from .exit_codes import EXIT_BUDGET, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK, EXIT_VALIDATION, exit_code_for

__all__ = [
    "CliApp",
    "main",
    "exit_code_for",
    "EXIT_OK",
    "EXIT_ERROR",
    "EXIT_INFEASIBLE",
    "EXIT_BUDGET",
    "EXIT_VALIDATION",
]
