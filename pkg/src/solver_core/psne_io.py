from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, List, Union

from src.game_core import JointAction, ValidationError

from .models import SearchStats


def format_psne(psne: Iterable[JointAction]) -> str:
    return "".join(",".join(str(a) for a in x) + "\n" for x in psne)


def write_psne(psne: Iterable[JointAction], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_psne(psne), encoding="utf-8")
    return path


def parse_psne(text: str) -> List[JointAction]:
    out: List[JointAction] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            x = tuple(int(tok) for tok in line.split(","))
        except ValueError as e:
            raise ValidationError(f"Line {lineno}: {e}") from e
        if any(a not in (-1, 1) for a in x):
            raise ValidationError(f"Line {lineno}: actions must be -1 or 1.")
        out.append(x)
    return out


def read_psne(path: Union[str, Path]) -> List[JointAction]:
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"PSNE file not found: {path}")
    return parse_psne(path.read_text(encoding="utf-8"))


def dumps_stats(stats: SearchStats, *, timing: bool = True) -> str:
    """Stats JSON; timing=False leaves out wall time so reruns give identical bytes."""
    data = stats.to_dict()
    if not timing:
        data.pop("wall_time_ms")
    return json.dumps(data, indent=2) + "\n"
