from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from src.scenario_core import BREAK, SCENARIO_MODES

from .base_command import BaseCommand


class ScenarioCommand(BaseCommand):
    COMMAND_ID = "scenario"
    HELP = "Filibuster / cloture scenarios: coalitions and diffusion sweeps."
    ORDER = 30

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("game", help="game JSON")
        parser.add_argument("--quota", type=int, required=True, help="+1 votes needed for cloture")
        parser.add_argument("--party", default=None, help="JSON list of member indices or labels")
        parser.add_argument("--mode", choices=SCENARIO_MODES, default=BREAK)
        parser.add_argument("--k-max", type=int, default=1, help="diffusion: largest forced set size")
        parser.add_argument("--exact", action="store_true", help="exact coalition sweep")
        parser.add_argument("--psne", default=None, help="PSNE file to use instead of solving the game")
        parser.add_argument("--spread", action="store_true", help="diffusion: also run the greedy spread heuristic")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.scenario(
            args.game,
            args.out,
            mode=args.mode,
            quota=args.quota,
            party_path=args.party,
            k_max=args.k_max,
            exact=args.exact,
            psne_path=args.psne,
            spread=args.spread,
        )
