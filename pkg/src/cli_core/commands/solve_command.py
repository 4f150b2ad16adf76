from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from src.solver_core import AUTO, METHODS

from .base_command import BaseCommand


class SolveCommand(BaseCommand):
    COMMAND_ID = "solve"
    HELP = "Compute (or count) the PSNE of a game."
    ORDER = 10

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("game", help="game JSON")
        parser.add_argument("--method", choices=METHODS, default=AUTO)
        parser.add_argument("--count-only", action="store_true", help="write the count as JSON instead of the PSNE")
        parser.add_argument("--first", action="store_true", help="stop at one PSNE")
        parser.add_argument("--budget", type=int, default=None, help="search-tree visit budget")
        parser.add_argument("--anytime-drop", type=int, default=0, help="dnc: separator edges to ignore")
        parser.add_argument("--stats", default=None, help="also write search stats JSON here")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.solve(
            args.game,
            args.out,
            method=args.method,
            count_only=args.count_only,
            first=args.first,
            budget=args.budget,
            anytime_drop=args.anytime_drop,
            stats_out=args.stats,
        )
