from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from src.orchestration_core import GADGET_KINDS
from src.reductions_core import BASIC, ONE_IN_THREE_VARIANTS

from .base_command import BaseCommand


class GadgetCommand(BaseCommand):
    COMMAND_ID = "gadget"
    HELP = "Build a reduction gadget game from a DIMACS formula or a knapsack JSON."
    ORDER = 60

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", choices=GADGET_KINDS)
        parser.add_argument("source", help="DIMACS CNF (3sat, one-in-three) or knapsack JSON")
        parser.add_argument("--epsilon", type=float, default=None, help="gadget slack in (0, 1)")
        parser.add_argument("--variant", choices=ONE_IN_THREE_VARIANTS, default=BASIC)
        parser.add_argument("--designated", default=None, help="one-in-three: write designated players here")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.gadget(
            args.kind,
            args.source,
            args.out,
            epsilon=args.epsilon,
            variant=args.variant,
            designated_out=args.designated,
        )
