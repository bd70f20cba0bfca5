"""Shared fixtures for the hint_game test suite."""

import pytest

from hint_game.config import config as config_module
from hint_game.core.game import HintVector, SecretBits
from hint_game.utils.rng import RngStream


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Every test starts from the packaged defaults, away from any local or env config."""
    for var in ("HINT_GAME_CONFIG", "HINT_GAME_OUTPUT_DIR", "LOG_LEVEL"):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.chdir(tmp_path)
    config_module.reset_config()
    yield
    config_module.reset_config()


@pytest.fixture
def good_hint():
    return HintVector(0.3, 0.3)


@pytest.fixture
def zero_secrets():
    return SecretBits(0, 0)


@pytest.fixture
def rng():
    return RngStream(20240611)
