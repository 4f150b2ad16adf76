from .base_command import BaseCommand
from .registry import get_command_classes

__all__ = ["BaseCommand", "get_command_classes"]
