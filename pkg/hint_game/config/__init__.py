"""Config package for hint_game."""
