"""
Configuration management for the gmdual package.

Settings are resolved in three layers:
1. Packaged defaults (gmdual/core/default_config.json)
2. User overrides (~/.gmdual/config.json), deep-merged over the defaults
3. Runtime overrides made with set_config_value(..., save=False)

The solver bounds, the random seed of the lattice trials, the operator
language limits and the logging setup are all read from here, so a user can
tighten or relax them without touching the source.
"""

import os
import json
from typing import Dict, Any

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "default_config.json")
USER_CONFIG_PATH = os.path.expanduser("~/.gmdual/config.json")

# Configuration singleton
_config_cache: Dict[str, Any] = {}


def get_config(reload: bool = False) -> Dict[str, Any]:
    """
    Get the configuration dictionary, loading it on first use.

    Args:
        reload (bool): Force a reload from disk even if cached

    Returns:
        Dict[str, Any]: The merged configuration
    """
    global _config_cache

    if not _config_cache or reload:
        _config_cache = load_config()

    return _config_cache


def load_config() -> Dict[str, Any]:
    """
    Load the packaged defaults and merge the user file over them.

    A user file only needs the keys it changes, e.g.
    ``{"pairing": {"lattice_trials": 500}}``.

    Returns:
        Dict[str, Any]: The merged configuration dictionary
    """
    config: Dict[str, Any] = {}

    if os.path.exists(DEFAULT_CONFIG_PATH):
        with open(DEFAULT_CONFIG_PATH, "r") as f:
            config.update(json.load(f))

    if os.path.exists(USER_CONFIG_PATH):
        with open(USER_CONFIG_PATH, "r") as f:
            deep_merge(config, json.load(f))

    return config


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> None:
    """
    Recursively merge ``override`` into ``base`` in place.

    Nested dictionaries are merged key by key; any other value in
    ``override`` replaces the one in ``base``.

    Args:
        base (Dict[str, Any]): Dictionary to update
        override (Dict[str, Any]): Values taking precedence
    """
    for key, value in override.items():
        if key in base and isinstance(base[key], dict) and isinstance(value, dict):
            deep_merge(base[key], value)
        else:
            base[key] = value


def save_user_config(config: Dict[str, Any]) -> None:
    """
    Write ``config`` to the user configuration file and refresh the cache.

    Args:
        config (Dict[str, Any]): Configuration to persist
    """
    os.makedirs(os.path.dirname(USER_CONFIG_PATH), exist_ok=True)

    with open(USER_CONFIG_PATH, "w") as f:
        json.dump(config, f, indent=2)

    global _config_cache
    _config_cache = load_config()


def get_config_value(key: str, default: Any = None) -> Any:
    """
    Get a configuration value using dot notation.

    Examples:
        >>> get_config_value("pairing.lattice_trials", 100)
        100

        >>> get_config_value("nonexistent.key", "fallback")
        'fallback'

    Args:
        key (str): Dotted key such as ``"pairing.max_tilde_shift"``
        default (Any): Value returned when the key is missing

    Returns:
        Any: The configured value or ``default``
    """
    current: Any = get_config()

    for part in key.split("."):
        if isinstance(current, dict) and part in current:
            current = current[part]
        else:
            return default

    return current


def set_config_value(key: str, value: Any, save: bool = True) -> None:
    """
    Set a configuration value using dot notation.

    Intermediate dictionaries are created as needed. With ``save=False`` the
    change lives only in the in-memory cache, which is what the CLI and the
    tests use for one-off overrides.

    Args:
        key (str): Dotted key
        value (Any): Value to store
        save (bool): Persist the whole configuration to the user file
    """
    config = get_config()

    parts = key.split(".")
    current = config
    for part in parts[:-1]:
        if part not in current or not isinstance(current[part], dict):
            current[part] = {}
        current = current[part]
    current[parts[-1]] = value

    global _config_cache
    _config_cache = config

    if save:
        save_user_config(config)
