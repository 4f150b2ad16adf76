from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from src.game_core import LigError
from src.genlearn_core import LearnConfig
from src.solver_core import SearchConfig

from .validators import validate_settings

LogFn = Callable[[str], None]


@dataclass(frozen=True)
class Settings:
    """Tunables shared by every command; persisted as JSON by ConfigStore."""

    tie_epsilon: float = 0.0
    brute_force_cap: int = 25
    exact_cap: int = 25
    potential_tolerance: float = 1e-12
    search_budget: Optional[int] = None
    threads: int = 1
    use_propagation: bool = True
    dynamics_round_factor: int = 4
    tie_width: int = 16
    dnc_leaf_size: int = 12
    l2_lambda: float = 0.1
    learn_max_iters: int = 5000
    learn_tolerance: float = 1e-8

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Replace the fields given with a value other than None."""
        known = {f.name for f in fields(self)}
        picked = {k: v for k, v in overrides.items() if k in known and v is not None}
        out = replace(self, **picked) if picked else self
        validate_settings(out)
        return out

    def search_config(
        self, *, count_only: bool = False, budget: Optional[int] = None, limit: Optional[int] = None
    ) -> SearchConfig:
        return SearchConfig(
            max_nodes=budget if budget is not None else self.search_budget,
            parallel=self.threads > 1,
            count_only=count_only,
            use_propagation=self.use_propagation,
            threads=self.threads,
            limit=limit,
        )

    def learn_config(self, l2_lambda: Optional[float] = None) -> LearnConfig:
        return LearnConfig(
            l2_lambda=self.l2_lambda if l2_lambda is None else l2_lambda,
            max_iters=self.learn_max_iters,
            tolerance=self.learn_tolerance,
        )

    def round_cap(self, n: int) -> int:
        return self.dynamics_round_factor * max(int(n), 1)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class ConfigStore:
    def __init__(self, config_path: Path, log_fn: Optional[LogFn] = None):
        self.config_path = Path(config_path)
        self._log = log_fn or (lambda _: None)

    def load(self) -> Settings:
        if not self.config_path.exists():
            return Settings()
        try:
            data = json.loads(self.config_path.read_text(encoding="utf-8"))
            if not isinstance(data, dict):
                raise ValueError("top level is not an object")
            known = {f.name for f in fields(Settings)}
            unknown = sorted(set(data) - known)
            if unknown:
                self._log(f"[WARN] Ignoring unknown settings: {', '.join(unknown)}")
            settings = Settings(**{k: v for k, v in data.items() if k in known})
            validate_settings(settings)
            return settings
        except (ValueError, TypeError, LigError) as e:
            # corrupt or invalid file: fall back to defaults
            self._log(f"[WARN] Settings file {self.config_path} is unusable ({e}); using defaults.")
            return Settings()

    def save(self, settings: Settings) -> None:
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        self.config_path.write_text(json.dumps(asdict(settings), indent=2), encoding="utf-8")
