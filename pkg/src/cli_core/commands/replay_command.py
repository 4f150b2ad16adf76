from __future__ import annotations

import argparse
from pathlib import Path
from typing import List, Optional

from src.game_core import LigError, ValidationError
from src.orchestration_core import artifact_mismatches, read_manifest

from .base_command import BaseCommand


class ReplayCommand(BaseCommand):
    COMMAND_ID = "replay"
    HELP = "Re-run a recorded invocation and check its outputs match byte-for-byte."
    ORDER = 90

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("manifest_file", metavar="MANIFEST", help="a <out>.manifest.json written by an earlier run")

    def primary_output(self, args: argparse.Namespace) -> Optional[Path]:
        return None

    def run(self, args: argparse.Namespace) -> List[Path]:
        from ..cli_app import CliApp

        recorded = read_manifest(args.manifest_file)
        if recorded.command == self.COMMAND_ID:
            raise ValidationError("Refusing to replay a replay manifest.")

        self.log(f"[INFO] Replaying '{recorded.command}': {' '.join(recorded.argv)}")
        code = CliApp(stream=None, log_fn=self.log).run(recorded.argv, record=False)
        if code != recorded.exit_code:
            raise LigError(f"Replay exited with {code}, recorded run exited with {recorded.exit_code}.")

        diff = artifact_mismatches(recorded)
        if diff:
            names = ", ".join(sorted(diff))
            raise LigError(f"Replay produced different outputs: {names}")

        self.log(f"[OK] Replay matched {len(recorded.artifacts)} artifact(s).")
        return [Path(p) for p in recorded.artifacts]
