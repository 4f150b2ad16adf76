"""
Vote ingestion.

Raw roll-call codes map to +1 (voted yes), -1 (voted no) or MAJORITY, which
takes the majority sign of the other resolved votes of that instance.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Any, Callable, List, Mapping, Optional, Sequence, Union

from src.game_core import ValidationError

from .models import DEFAULT_CODE_MAP, MAJORITY, VoteMatrix

LogFn = Callable[[str], None]


def _noop(_: str) -> None:
    return


def _code(value: Any, r: int, c: int) -> int:
    try:
        return int(str(value).strip())
    except ValueError as e:
        raise ValidationError(f"Instance {r}, column {c}: '{value}' is not an integer vote code.") from e


def ingest_votes(
    rows: Sequence[Sequence[Any]],
    code_map: Optional[Mapping[int, int]] = None,
    labels: Optional[Sequence[str]] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> VoteMatrix:
    """
    Map a rectangular table of vote codes to a VoteMatrix.

    Majority codes resolve to the sign held by most of the other resolved
    votes in the instance; an even split resolves to +1 and is logged.
    """
    log = log_fn or _noop
    cmap = dict(DEFAULT_CODE_MAP if code_map is None else code_map)
    if not rows:
        raise ValidationError("The vote table is empty.")
    width = len(rows[0])

    out: List[tuple] = []
    for r, row in enumerate(rows):
        if len(row) != width:
            raise ValidationError(f"Instance {r} has {len(row)} votes, expected {width}.")
        mapped: List[int] = []
        for c, value in enumerate(row):
            code = _code(value, r, c)
            if code not in cmap:
                raise ValidationError(f"Instance {r}, column {c}: vote code {code} has no mapping.")
            mapped.append(cmap[code])
        resolved = [a for a in mapped if a != MAJORITY]
        if not resolved:
            raise ValidationError(f"Instance {r}: every vote defers to the majority, nothing to resolve against.")
        if len(resolved) < len(mapped):
            balance = sum(resolved)
            if balance == 0:
                log(f"[WARN] Instance {r}: majority code over an even split, resolved to +1.")
            fill = -1 if balance < 0 else 1
            mapped = [fill if a == MAJORITY else a for a in mapped]
        out.append(tuple(mapped))
    return VoteMatrix(tuple(out), tuple(labels or ()))


def _is_action_table(rows: Sequence[Sequence[str]]) -> bool:
    for row in rows:
        for value in row:
            if value.strip() not in ("1", "-1", "+1"):
                return False
    return True


def read_votes_csv(
    path: Union[str, Path],
    code_map: Optional[Mapping[int, int]] = None,
    *,
    log_fn: Optional[LogFn] = None,
) -> VoteMatrix:
    """
    Header row of player labels, then one instance per row.

    A file holding only -1 / +1 is read as actions, anything else as codes.
    """
    p = Path(path)
    if not p.exists():
        raise ValidationError(f"Votes file not found: {p}")
    with p.open("r", encoding="utf-8", newline="") as f:
        table = [row for row in csv.reader(f) if row and any(v.strip() for v in row)]
    if len(table) < 2:
        raise ValidationError(f"{p} needs a header row and at least one instance.")
    labels = [s.strip() for s in table[0]]
    body = table[1:]
    if _is_action_table(body):
        try:
            return VoteMatrix(tuple(tuple(int(v) for v in row) for row in body), tuple(labels))
        except ValueError as e:
            raise ValidationError(f"{p}: {e}") from e
    return ingest_votes(body, code_map, labels, log_fn=log_fn)


def write_votes_csv(votes: VoteMatrix, path: Union[str, Path]) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(votes.labels)
        writer.writerows(votes.instances)
    return p
