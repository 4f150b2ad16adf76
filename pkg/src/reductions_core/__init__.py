from .models import (
    BASIC,
    EXTRA_PLAYERS,
    ONE_IN_THREE_VARIANTS,
    VERIFICATION_PLAYERS,
    CnfFormula,
    KnapsackInstance,
)
from .gadgets import gadget_3sat, gadget_knapsack_star, gadget_one_in_three
from .oracles import (
    count_knapsack_feasible,
    count_one_in_three,
    count_satisfying,
    random_3cnf,
    random_knapsack,
    random_monotone_3cnf,
)
from .readers import knapsack_from_dict, parse_dimacs, read_dimacs, read_knapsack

__all__ = [
    "BASIC",
    "EXTRA_PLAYERS",
    "VERIFICATION_PLAYERS",
    "ONE_IN_THREE_VARIANTS",
    "CnfFormula",
    "KnapsackInstance",
    "gadget_3sat",
    "gadget_one_in_three",
    "gadget_knapsack_star",
    "count_satisfying",
    "count_one_in_three",
    "count_knapsack_feasible",
    "random_3cnf",
    "random_monotone_3cnf",
    "random_knapsack",
    "parse_dimacs",
    "read_dimacs",
    "knapsack_from_dict",
    "read_knapsack",
]
