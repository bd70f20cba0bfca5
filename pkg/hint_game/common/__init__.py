"""Shared enums and exceptions for hint_game."""
