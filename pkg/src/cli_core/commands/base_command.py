from __future__ import annotations

import argparse
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Callable, List, Optional

from src.orchestration_core import LigController


class BaseCommand(ABC):
    """
    Contract for modular subcommands.

    configure(parser) -> declares the subcommand's flags
    run(args) -> does the work, returns the files written
    primary_output(args) -> the file the manifest sits next to (optional)
    """

    COMMAND_ID: str = "base"
    HELP: str = ""
    ORDER: int = 100
    USES_SEED: bool = False

    def __init__(self, controller: LigController, log_fn: Callable[[str], None]):
        self.controller = controller
        self.log = log_fn

    @classmethod
    @abstractmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        raise NotImplementedError

    @abstractmethod
    def run(self, args: argparse.Namespace) -> List[Path]:
        raise NotImplementedError

    def primary_output(self, args: argparse.Namespace) -> Optional[Path]:
        out = getattr(args, "out", None)
        return Path(out) if out else None

    def writes_manifest(self) -> bool:
        return True
