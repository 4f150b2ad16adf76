from __future__ import annotations

import itertools
from typing import Optional

import numpy as np

from .models import CnfFormula, KnapsackInstance


def count_satisfying(formula: CnfFormula) -> int:
    return sum(
        formula.satisfied_by(truth)
        for truth in itertools.product((False, True), repeat=formula.num_vars)
    )


def count_one_in_three(formula: CnfFormula) -> int:
    return sum(
        formula.one_in_three_by(truth)
        for truth in itertools.product((False, True), repeat=formula.num_vars)
    )


def count_knapsack_feasible(instance: KnapsackInstance) -> int:
    a = instance.weights
    return sum(
        sum(w for w, pick in zip(a, picks) if pick) <= instance.capacity
        for picks in itertools.product((False, True), repeat=len(a))
    )


def random_3cnf(
    num_vars: int,
    num_clauses: int,
    rng: Optional[np.random.Generator] = None,
    *,
    monotone: bool = False,
) -> CnfFormula:
    """Clauses over three distinct variables with independent fair negations."""
    rng = rng or np.random.default_rng()
    clauses = []
    for _ in range(num_clauses):
        vs = sorted(int(v) for v in rng.choice(num_vars, size=3, replace=False))
        clauses.append(tuple((v, False if monotone else bool(rng.integers(0, 2))) for v in vs))
    return CnfFormula(num_vars, tuple(clauses))  # type: ignore[arg-type]


def random_monotone_3cnf(num_vars: int, num_clauses: int, rng: Optional[np.random.Generator] = None) -> CnfFormula:
    return random_3cnf(num_vars, num_clauses, rng, monotone=True)


def random_knapsack(
    num_items: int,
    max_weight: int = 10,
    rng: Optional[np.random.Generator] = None,
) -> KnapsackInstance:
    rng = rng or np.random.default_rng()
    weights = tuple(int(a) for a in rng.integers(1, max_weight + 1, size=num_items))
    capacity = int(rng.integers(0, sum(weights) + 1))
    return KnapsackInstance(weights, capacity)
