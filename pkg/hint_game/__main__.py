#!/usr/bin/env python3
"""
Entry point for executing hint_game as a module.
Usage: python -m hint_game
"""

import sys

from .cli.cli import main

if __name__ == "__main__":
    sys.exit(main())
