#!/usr/bin/env python3

"""Setup.py for hint-game package.

This is a minimal setup.py that delegates to pyproject.toml.
"""

from setuptools import setup

setup()
