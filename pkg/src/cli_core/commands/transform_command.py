from __future__ import annotations

import argparse
from pathlib import Path
from typing import List

from src.orchestration_core import TRANSFORM_KINDS

from .base_command import BaseCommand


class TransformCommand(BaseCommand):
    COMMAND_ID = "transform"
    HELP = "Convert between LIG, polymatrix and {0,1}-action game files, or report a game's potential."
    ORDER = 70

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", choices=TRANSFORM_KINDS)
        parser.add_argument("source")
        parser.add_argument("--out", required=True)

    def run(self, args: argparse.Namespace) -> List[Path]:
        return self.controller.transform(args.kind, args.source, args.out)
