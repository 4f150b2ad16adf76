from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from src.game_core import ValidationError

from .models import GoalSpec, InfluenceResult, SetPreference, TieDag


def dumps_result(result: InfluenceResult) -> str:
    return json.dumps(result.to_dict(), indent=2) + "\n"


def write_result(result: InfluenceResult, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps_result(result), encoding="utf-8")
    return path


def write_dag(dag: TieDag, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(dag.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path


def _read_json(path: Union[str, Path], what: str) -> Any:
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise ValidationError(f"{what} file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"{what} file is not valid JSON ({path}): {e}") from e


def read_vector(path: Union[str, Path], what: str = "Vector") -> list:
    """A JSON list, or an object holding one under "values"."""
    data = _read_json(path, what)
    if isinstance(data, dict):
        data = data.get("values")
    if not isinstance(data, list):
        raise ValidationError(f"{what} file must hold a JSON list: {path}")
    return data


def read_goal(spec: str) -> GoalSpec:
    """CLI goal: target=<file>, weighted=<file> or max-adopters."""
    if spec == "max-adopters":
        return GoalSpec.max_adopters()
    kind, _, arg = spec.partition("=")
    if kind == "target" and arg:
        return GoalSpec.target_psne([int(a) for a in read_vector(arg, "Target")])
    if kind == "weighted" and arg:
        return GoalSpec.weighted_adopters([float(t) for t in read_vector(arg, "Goal weights")])
    raise ValidationError(f"Unknown goal '{spec}' (use target=<file>, max-adopters or weighted=<file>).")


def read_preference(spec: str) -> SetPreference:
    """CLI preference: min-card or weighted=<file>."""
    if spec == "min-card":
        return SetPreference.min_cardinality()
    kind, _, arg = spec.partition("=")
    if kind == "weighted" and arg:
        return SetPreference.weighted_nodes([float(v) for v in read_vector(arg, "Preference weights")])
    raise ValidationError(f"Unknown set preference '{spec}' (use min-card or weighted=<file>).")
