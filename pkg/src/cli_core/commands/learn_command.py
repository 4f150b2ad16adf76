from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from .base_command import BaseCommand


class LearnCommand(BaseCommand):
    COMMAND_ID = "learn"
    HELP = "Learn a game from a votes CSV by per-player logistic regression."
    ORDER = 40

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("votes", help="CSV: header of labels, one instance per row (codes or +/-1)")
        parser.add_argument("--lambda", dest="l2_lambda", type=float, default=None, help="L2 weight")
        parser.add_argument("--report", default=None, help="write fit details and the PSNE representation rate here")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.learn(args.votes, args.out, l2_lambda=args.l2_lambda, report_out=args.report)
