from __future__ import annotations

import argparse
from pathlib import Path
from typing import List, Optional

from src.game_core import ValidationError
from src.orchestration_core import SUITES

from .base_command import BaseCommand


def _values(text: Optional[str]) -> Optional[List[float]]:
    if not text:
        return None
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise ValidationError(f"--values must be a comma-separated list of numbers ({e}).") from e


class BenchCommand(BaseCommand):
    COMMAND_ID = "bench"
    HELP = "Run a benchmark suite and write its table as CSV."
    ORDER = 50
    USES_SEED = True

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("suite", choices=SUITES)
        parser.add_argument("--trials", type=int, default=None, help="games per row")
        parser.add_argument("--values", default=None, help="flip probabilities (uniform) or sizes, comma-separated")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.bench(
            args.suite, args.out, trials=args.trials, seed=args.seed, values=_values(args.values)
        )
