from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from src.game_core import ValidationError
from src.game_core.constants import SETTINGS_FILENAME
from src.orchestration_core import (
    ConfigStore,
    LigController,
    LogSink,
    RunManifest,
    hash_artifacts,
    manifest_path_for,
    validate_seed,
    write_manifest,
)

from .commands import BaseCommand, get_command_classes
from .exit_codes import EXIT_ERROR, EXIT_OK, exit_code_for

PROG = "lig"


class _Parser(argparse.ArgumentParser):
    # bad flags are input validation errors (exit 4), not argparse's exit 2
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ValidationError(f"{self.prog}: {message}")


class CliApp:
    """
    Command-line orchestrator:
      - builds the parser from the command registry
      - owns the LogSink, ConfigStore and LigController for one invocation
      - maps LigError subclasses to exit codes
      - writes the run manifest next to the primary output

    Design rules:
      - Commands call LigController for work and return the files they wrote
      - Commands write logs via log_fn
      - CliApp is the only place that drains logs and chooses exit codes
    """

    def __init__(self, stream: Optional[TextIO] = sys.stderr, log_fn: Optional[Callable[[str], None]] = None):
        self._stream = stream
        self._forward = log_fn
        self._log_sink = LogSink()
        self.log_fn: Callable[[str], None] = self._log_sink.write
        self._commands: Dict[str, type[BaseCommand]] = {c.COMMAND_ID: c for c in get_command_classes()}

    # -------------------------
    # Parser
    # -------------------------

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _Parser(prog=PROG, description="Linear influence games: equilibria, influence, learning.")
        parser.add_argument("--config", default=None, help=f"settings JSON (default: ./{SETTINGS_FILENAME})")
        parser.add_argument("--threads", type=int, default=None, help="worker cap; output does not depend on it")
        parser.add_argument("--seed", type=int, default=0, help="seed for every random choice")
        parser.add_argument("--manifest", default=None, help="write the run manifest here")

        sub = parser.add_subparsers(dest="command", metavar="COMMAND")
        sub.required = True
        for cls in self._commands.values():
            p = sub.add_parser(cls.COMMAND_ID, help=cls.HELP, description=cls.HELP)
            cls.configure(p)
        return parser

    # -------------------------
    # Run
    # -------------------------

    def run(self, argv: Optional[Sequence[str]] = None, *, record: bool = True) -> int:
        argv = list(sys.argv[1:] if argv is None else argv)
        started = time.perf_counter()

        try:
            args = self.build_parser().parse_args(argv)
        except ValidationError as e:
            self.log_fn(f"[ERROR] {e}")
            self._flush()
            return exit_code_for(e)
        except SystemExit as e:
            # --help
            self._flush()
            return int(e.code or 0)

        code = EXIT_OK
        written: List[Path] = []
        command: Optional[BaseCommand] = None
        settings_echo: Dict[str, Any] = {}
        seeds: List[int] = []
        try:
            seed = validate_seed(args.seed)
            args.seed = seed
            config_path = Path(args.config) if args.config else Path.cwd() / SETTINGS_FILENAME
            settings = ConfigStore(config_path, self.log_fn).load().with_overrides(threads=args.threads)
            settings_echo = settings.to_dict()

            controller = LigController(settings, self.log_fn)
            command = self._commands[args.command](controller, self.log_fn)
            seeds = [seed] if command.USES_SEED else []
            written = list(command.run(args))
            warnings = self._log_sink.count("WARN")
            self.log_fn(f"[OK] {args.command} wrote {len(written)} file(s), {warnings} warning(s).")
        except Exception as e:
            code = exit_code_for(e)
            self.log_fn(f"[ERROR] {e}")

        if record and command is not None and command.writes_manifest():
            target = Path(args.manifest) if args.manifest else None
            primary = command.primary_output(args)
            if target is None and primary is not None:
                target = manifest_path_for(primary)
            if primary is not None and primary not in written and primary.exists():
                # partial results written before a budget cut-off
                written.append(primary)
            if target is not None:
                manifest = RunManifest(
                    command=args.command,
                    argv=argv,
                    config={"settings": settings_echo, "args": self._args_echo(args)},
                    seeds=seeds,
                    artifacts=hash_artifacts(written),
                    wall_time_ms=int((time.perf_counter() - started) * 1000),
                    exit_code=code,
                    log=self._log_sink.peek(),
                )
                try:
                    write_manifest(manifest, target)
                except OSError as e:
                    self.log_fn(f"[ERROR] Failed to write manifest {target}: {e}")
                    code = code or EXIT_ERROR

        self._flush()
        return code

    # -------------------------
    # Helpers
    # -------------------------

    @staticmethod
    def _args_echo(args: argparse.Namespace) -> Dict[str, Any]:
        return {k: v for k, v in sorted(vars(args).items()) if k not in ("config", "manifest")}

    def _flush(self) -> None:
        for line in self._log_sink.drain():
            if self._forward is not None:
                self._forward(line)
            if self._stream is not None:
                print(line, file=self._stream)


def main(argv: Optional[Sequence[str]] = None) -> int:
    return CliApp().run(argv)
