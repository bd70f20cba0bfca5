"""CLI interface for hint_game."""

from .cli import main as cli_main

__all__ = ['cli_main']
