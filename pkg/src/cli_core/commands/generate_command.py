from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from src.genlearn_core import FAMILIES, GenConfig

from .base_command import BaseCommand


class GenerateCommand(BaseCommand):
    COMMAND_ID = "generate"
    HELP = "Sample a synthetic game and write it as JSON."
    ORDER = 0
    USES_SEED = True

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--family", choices=FAMILIES, required=True)
        parser.add_argument("-n", type=int, required=True, help="number of players")
        parser.add_argument("--edge-p", type=float, default=0.5, help="erdos: edge probability")
        parser.add_argument("--arc-p", type=float, default=0.5, help="uniform: arc probability")
        parser.add_argument("--flip-p", type=float, default=0.0, help="uniform/prefattach: probability of a -1 weight")
        parser.add_argument("--m", type=int, default=3, help="prefattach: links per new node")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        cfg = GenConfig(
            family=args.family,
            n=args.n,
            seed=args.seed,
            edge_p=args.edge_p,
            arc_p=args.arc_p,
            flip_p=args.flip_p,
            m=args.m,
        )
        return self.controller.generate(cfg, args.out)
