from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from src.game_core import ValidationError

Literal = Tuple[int, bool]  # (variable index, negated)

BASIC = "basic"
EXTRA_PLAYERS = "extra_players"
VERIFICATION_PLAYERS = "verification_players"
ONE_IN_THREE_VARIANTS = (BASIC, EXTRA_PLAYERS, VERIFICATION_PLAYERS)


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula over variables 0..num_vars-1; every clause has three distinct variables."""

    num_vars: int
    clauses: Tuple[Tuple[Literal, Literal, Literal], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValidationError(f"A formula needs at least one variable (num_vars={self.num_vars}).")
        clean = []
        for k, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValidationError(f"Clause {k} has {len(clause)} literals, expected 3.")
            lits = tuple((int(v), bool(neg)) for v, neg in clause)
            for v, _ in lits:
                if not (0 <= v < self.num_vars):
                    raise ValidationError(f"Clause {k} references variable {v} outside 0..{self.num_vars - 1}.")
            if len({v for v, _ in lits}) != 3:
                raise ValidationError(f"Clause {k} repeats a variable: {lits}")
            clean.append(lits)
        object.__setattr__(self, "clauses", tuple(clean))

    @classmethod
    def from_signed(cls, num_vars: int, clauses: List[Tuple[int, int, int]]) -> "CnfFormula":
        """Clauses as signed 1-based literals, DIMACS style: -2 means not x_2."""
        return cls(num_vars, tuple(tuple((abs(l) - 1, l < 0) for l in c) for c in clauses))  # type: ignore[misc]

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def is_monotone(self) -> bool:
        return not any(neg for clause in self.clauses for _, neg in clause)

    def satisfied_by(self, truth: Tuple[bool, ...]) -> bool:
        return all(any(truth[v] != neg for v, neg in clause) for clause in self.clauses)

    def one_in_three_by(self, truth: Tuple[bool, ...]) -> bool:
        return all(sum(truth[v] for v, _ in clause) == 1 for clause in self.clauses)


@dataclass(frozen=True)
class KnapsackInstance:
    weights: Tuple[int, ...]
    capacity: int

    def __post_init__(self) -> None:
        if not self.weights:
            raise ValidationError("A knapsack instance needs at least one item.")
        for a in self.weights:
            if int(a) != a or a < 1:
                raise ValidationError(f"Item weights must be positive integers (got {a}).")
        if int(self.capacity) != self.capacity or self.capacity < 0:
            raise ValidationError(f"Capacity must be a nonnegative integer (got {self.capacity}).")
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        object.__setattr__(self, "capacity", int(self.capacity))
