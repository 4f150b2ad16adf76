from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Union

from src.game_core import ValidationError

MANIFEST_SUFFIX = ".manifest.json"


@dataclass
class RunManifest:
    """What one CLI invocation did, enough to run it again."""

    command: str
    argv: List[str]
    config: Dict[str, Any] = field(default_factory=dict)
    seeds: List[int] = field(default_factory=list)
    artifacts: Dict[str, str] = field(default_factory=dict)
    wall_time_ms: int = 0
    exit_code: int = 0
    log: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunManifest":
        try:
            return cls(
                command=str(data["command"]),
                argv=[str(a) for a in data["argv"]],
                config=dict(data.get("config", {})),
                seeds=[int(s) for s in data.get("seeds", [])],
                artifacts={str(k): str(v) for k, v in data.get("artifacts", {}).items()},
                wall_time_ms=int(data.get("wall_time_ms", 0)),
                exit_code=int(data.get("exit_code", 0)),
                log=[str(s) for s in data.get("log", [])],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed run manifest: {e}") from e


def sha256_file(path: Union[str, Path]) -> str:
    h = hashlib.sha256()
    with Path(path).open("rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def hash_artifacts(paths: List[Union[str, Path]]) -> Dict[str, str]:
    return {str(p): sha256_file(p) for p in paths if Path(p).exists()}


def manifest_path_for(out: Union[str, Path]) -> Path:
    out = Path(out)
    return out.with_name(out.name + MANIFEST_SUFFIX)


def write_manifest(manifest: RunManifest, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(manifest.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path


def read_manifest(path: Union[str, Path]) -> RunManifest:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise ValidationError(f"Manifest not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"Manifest is not valid JSON ({path}): {e}") from e
    if not isinstance(data, dict):
        raise ValidationError(f"Manifest must hold a JSON object: {path}")
    return RunManifest.from_dict(data)


def artifact_mismatches(manifest: RunManifest) -> Dict[str, str]:
    """Recorded artifacts whose current hash differs, mapped to the new hash ('' if missing)."""
    out: Dict[str, str] = {}
    for name, digest in manifest.artifacts.items():
        p = Path(name)
        now = sha256_file(p) if p.exists() else ""
        if now != digest:
            out[name] = now
    return out
