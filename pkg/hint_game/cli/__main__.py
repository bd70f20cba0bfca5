#!/usr/bin/env python3
"""
Entry point for executing hint_game.cli as a module.
Usage: python -m hint_game.cli
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
