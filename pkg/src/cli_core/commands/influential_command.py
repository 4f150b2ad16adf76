from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from .base_command import BaseCommand


class InfluentialCommand(BaseCommand):
    COMMAND_ID = "influential"
    HELP = "Find a most influential set of players for a goal outcome."
    ORDER = 20

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("game", help="game JSON")
        parser.add_argument("--goal", default="max-adopters", help="target=<file> | max-adopters | weighted=<file>")
        parser.add_argument("--pref", default="min-card", help="min-card | weighted=<file>")
        parser.add_argument("--exact", action="store_true", help="exhaustive search instead of the greedy")
        parser.add_argument("--psne", default=None, help="PSNE file to use instead of solving the game")
        parser.add_argument("--live", action="store_true", help="count extensions by search, no PSNE list")
        parser.add_argument("--adopters-only", action="store_true", help="only players at +1 in the goal are candidates")
        parser.add_argument("--explore-ties", action="store_true", help="record the dag of tied greedy picks")
        parser.add_argument("--dag", default=None, help="write the tie dag JSON here")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.influential(
            args.game,
            args.out,
            goal=args.goal,
            pref=args.pref,
            exact=args.exact,
            psne_path=args.psne,
            live=args.live,
            adopters_only=args.adopters_only,
            explore_ties=args.explore_ties,
            dag_out=args.dag,
        )
