"""Configuration management for hint_game."""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from ..common.exceptions import ConfigurationError

# Load environment variables from .env file if it exists
load_dotenv()

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "HINT_GAME_CONFIG"
OUTPUT_DIR_ENV_VAR = "HINT_GAME_OUTPUT_DIR"
LOCAL_CONFIG_NAME = ".hint_game.yaml"
PACKAGED_CONFIG = Path(__file__).with_name("config.yaml")
EXPERIMENT_SECTIONS = ("grid", "symmetric", "decoherence")

# Global configuration cache
_config: Optional[Dict[str, Any]] = None


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, "r") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Configuration root in {path} must be a mapping")
    return data


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML, layered over the packaged defaults.

    Args:
        config_path: Explicit path; otherwise $HINT_GAME_CONFIG, then
                    .hint_game.yaml in the current directory

    Returns:
        Dictionary with configuration
    """
    global _config

    if _config is not None and config_path is None:
        return _config

    defaults = _read_yaml(PACKAGED_CONFIG)

    if config_path is None:
        config_path = os.environ.get(CONFIG_ENV_VAR)
    if config_path is None:
        local_config_path = Path.cwd() / LOCAL_CONFIG_NAME
        if local_config_path.exists():
            config_path = str(local_config_path)
            logger.info(f"Using local configuration from {local_config_path}")

    if config_path is None:
        _config = defaults
        return _config

    try:
        _config = _merge(defaults, _read_yaml(Path(config_path)))
        logger.info(f"Loaded configuration from {config_path}")
    except (OSError, yaml.YAMLError, ConfigurationError) as e:
        logger.error(f"Error loading configuration from {config_path}: {str(e)}")
        # Fall back to the packaged defaults
        _config = defaults
    return _config


def reset_config() -> None:
    """Drop the cached configuration so the next load re-reads files."""
    global _config
    _config = None


def get_game_config() -> Dict[str, Any]:
    config = load_config()
    return config.get("game", {})


def get_sweep_defaults(section: str) -> Dict[str, Any]:
    """
    Get defaults for one experiment command.

    Args:
        section: One of 'grid', 'symmetric', 'decoherence'

    Returns:
        Dictionary with the section's defaults
    """
    if section not in EXPERIMENT_SECTIONS:
        raise ConfigurationError(f"Unknown experiment section '{section}'")
    config = load_config()
    return config.get(section, {})


def get_verify_config() -> Dict[str, Any]:
    config = load_config()
    return config.get("verify", {})


def get_output_dir() -> Path:
    """Default output directory; $HINT_GAME_OUTPUT_DIR wins over the config file."""
    env_dir = os.environ.get(OUTPUT_DIR_ENV_VAR)
    if env_dir:
        return Path(env_dir)
    config = load_config()
    return Path(config.get("output", {}).get("dir", "./results"))


def get_thread_count() -> int:
    """Worker threads for sweeps; 0 means one per CPU."""
    config = load_config()
    threads = int(config.get("runtime", {}).get("threads", 0))
    if threads < 0:
        raise ConfigurationError(f"runtime.threads must be non-negative, got {threads}")
    return threads or (os.cpu_count() or 1)


def get_log_file() -> Optional[str]:
    config = load_config()
    return config.get("logging", {}).get("file")


def get_log_level() -> int:
    """Get log level from environment, then config.

    Returns:
        Logging level as integer
    """
    config = load_config()
    log_level_name = os.getenv("LOG_LEVEL", config.get("logging", {}).get("level", "INFO")).upper()
    log_levels = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL
    }
    return log_levels.get(log_level_name, logging.INFO)
