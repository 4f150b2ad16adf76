"""
Hardness-proof gadgets, emitted as {0,1}-action games.

Pipe the result through transforms_core.zero_one_to_pm1 before solving.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from src.game_core import InfluenceGame, ValidationError
from src.game_core.constants import DEFAULT_GADGET_EPSILON
from src.game_core.validators import validate_epsilon

from .models import (
    BASIC,
    EXTRA_PLAYERS,
    ONE_IN_THREE_VARIANTS,
    VERIFICATION_PLAYERS,
    CnfFormula,
    KnapsackInstance,
)


def gadget_3sat(formula: CnfFormula, epsilon: float = DEFAULT_GADGET_EPSILON) -> InfluenceGame:
    """
    Variables are players 0..n-1, clauses follow as players n..n+m-1.

    PSNE of the game correspond one-to-one to satisfying assignments: every
    clause player plays 1 and variable player i plays its truth value.
    """
    validate_epsilon(epsilon)
    n, m = formula.num_vars, formula.num_clauses
    thresholds = [0.0] * (n + m)
    arcs: List[Tuple[int, int, float]] = []
    for k, clause in enumerate(formula.clauses):
        c = n + k
        negated = 0
        for v, neg in clause:
            pos = 0 if neg else 1
            negated += 1 - pos
            thresholds[v] += 1 - 2 * pos
            arcs.append((c, v, float(1 - 2 * pos)))
            arcs.append((v, c, float(2 * pos - 1)))
        thresholds[c] = 1.0 - epsilon - negated
    labels = [f"x{v + 1}" for v in range(n)] + [f"C{k + 1}" for k in range(m)]
    return InfluenceGame.from_arcs(n + m, arcs, thresholds, labels=labels)


def gadget_one_in_three(
    formula: CnfFormula,
    epsilon: float = DEFAULT_GADGET_EPSILON,
    variant: str = BASIC,
) -> Tuple[InfluenceGame, Tuple[int, ...]]:
    """
    Monotone one-in-three SAT gadgets. Returns the game and its designated players.

    basic                 designated = clause players
    extra_players         designated = clause players + m(m-1) fan-out players
    verification_players  designated = the m^2 players fed by the two verifiers
    """
    validate_epsilon(epsilon)
    if variant not in ONE_IN_THREE_VARIANTS:
        raise ValidationError(f"Unknown one-in-three variant '{variant}'.")
    if not formula.is_monotone:
        raise ValidationError("One-in-three gadgets need a monotone formula.")

    n, m = formula.num_vars, formula.num_clauses
    thresholds: List[float] = [0.0] * n + [epsilon] * m
    labels = [f"x{v + 1}" for v in range(n)] + [f"C{k + 1}" for k in range(m)]

    co_occurring = set()
    arcs: Dict[Tuple[int, int], float] = {}
    for k, clause in enumerate(formula.clauses):
        vs = [v for v, _ in clause]
        for u in vs:
            arcs[(u, n + k)] = 1.0
            for v in vs:
                if u != v:
                    co_occurring.add((u, v))
    for u, v in co_occurring:
        arcs[(u, v)] = -1.0

    designated: List[int] = list(range(n, n + m))

    if variant == EXTRA_PLAYERS:
        nxt = n + m
        for k in range(m):
            for _ in range(m - 1):
                arcs[(n + k, nxt)] = 1.0
                thresholds.append(epsilon)
                labels.append(f"E{nxt - n - m + 1}")
                designated.append(nxt)
                nxt += 1

    elif variant == VERIFICATION_PLAYERS:
        all_sat, none_sat = n + m, n + m + 1
        thresholds += [m - epsilon, -epsilon]
        labels += ["ALL", "NONE"]
        for k in range(m):
            arcs[(n + k, all_sat)] = 1.0
            arcs[(n + k, none_sat)] = -1.0
        designated = []
        for e in range(m * m):
            p = n + m + 2 + e
            arcs[(all_sat, p)] = 1.0
            arcs[(none_sat, p)] = 1.0
            thresholds.append(epsilon)
            labels.append(f"E{e + 1}")
            designated.append(p)

    game = InfluenceGame.from_arcs(
        len(thresholds), [(j, i, w) for (j, i), w in arcs.items()], thresholds, labels=labels
    )
    return game, tuple(designated)


def gadget_knapsack_star(
    instance: KnapsackInstance,
    epsilon: float = DEFAULT_GADGET_EPSILON,
) -> InfluenceGame:
    """
    Star with hub 0 and one leaf per item.

    The hub threshold is -(W + epsilon): with integer item weights the hub
    plays 1 exactly when the chosen leaves fit, and the hub-off profile is
    never an equilibrium, including at W = 0.
    """
    validate_epsilon(epsilon)
    items = instance.weights
    arcs = []
    for t, a in enumerate(items, start=1):
        arcs.append((0, t, 1.0))
        arcs.append((t, 0, -float(a)))
    thresholds = [-(instance.capacity + epsilon)] + [1.0] * len(items)
    labels = ["hub"] + [f"item{t}" for t in range(1, len(items) + 1)]
    return InfluenceGame.from_arcs(len(items) + 1, arcs, thresholds, labels=labels)
