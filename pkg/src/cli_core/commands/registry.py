from __future__ import annotations

from .base_command import BaseCommand
from .generate_command import GenerateCommand
from .solve_command import SolveCommand
from .influential_command import InfluentialCommand
from .scenario_command import ScenarioCommand
from .learn_command import LearnCommand
from .bench_command import BenchCommand
from .gadget_command import GadgetCommand
from .transform_command import TransformCommand
from .replay_command import ReplayCommand


def get_command_classes() -> list[type[BaseCommand]]:
    """Central place to register subcommands."""
    commands: list[type[BaseCommand]] = [
        GenerateCommand,
        SolveCommand,
        InfluentialCommand,
        ScenarioCommand,
        LearnCommand,
        BenchCommand,
        GadgetCommand,
        TransformCommand,
        ReplayCommand,
    ]

    # Sort by the ORDER attribute defined in each class
    return sorted(commands, key=lambda c: getattr(c, "ORDER", 100))
