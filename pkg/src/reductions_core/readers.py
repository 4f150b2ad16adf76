from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional, Tuple, Union

from src.game_core import ValidationError

from .models import CnfFormula, KnapsackInstance


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF restricted to three literals per clause."""
    num_vars: Optional[int] = None
    declared: Optional[int] = None
    clauses: List[Tuple[int, int, int]] = []
    pending: List[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValidationError(f"Line {lineno}: bad problem line '{line}'.")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValidationError(f"Line {lineno}: clause before the 'p cnf' line.")
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError as e:
            raise ValidationError(f"Line {lineno}: {e}") from e
        for lit in lits:
            if lit == 0:
                if len(pending) != 3:
                    raise ValidationError(f"Line {lineno}: clause has {len(pending)} literals, expected 3.")
                clauses.append((pending[0], pending[1], pending[2]))
                pending = []
            else:
                pending.append(lit)

    if num_vars is None:
        raise ValidationError("Missing 'p cnf' problem line.")
    if pending:
        raise ValidationError("Last clause is not terminated by 0.")
    if declared is not None and declared != len(clauses):
        raise ValidationError(f"Problem line declares {declared} clauses, found {len(clauses)}.")
    return CnfFormula.from_signed(num_vars, clauses)


def read_dimacs(path: Union[str, Path]) -> CnfFormula:
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"CNF file not found: {path}")
    return parse_dimacs(path.read_text(encoding="utf-8"))


def knapsack_from_dict(data: dict) -> KnapsackInstance:
    try:
        return KnapsackInstance(tuple(data["weights"]), data["capacity"])
    except (KeyError, TypeError) as e:
        raise ValidationError(f"Malformed knapsack document: {e}") from e


def read_knapsack(path: Union[str, Path]) -> KnapsackInstance:
    path = Path(path)
    try:
        return knapsack_from_dict(json.loads(path.read_text(encoding="utf-8")))
    except FileNotFoundError as e:
        raise ValidationError(f"Knapsack file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"Knapsack file is not valid JSON ({path}): {e}") from e
