"""Configuration settings for pystirling."""

import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ConfigError

logger = logging.getLogger(__name__)

CONFIG_ENV = "PYSTIRLING_CONFIG"
DEFAULT_CONFIG_PATH = "~/.pystirling.toml"


@dataclass(frozen=True)
class Config:
    """Default orders and bounds for builders, oracles and check suites."""

    # Brute-force enumeration bounds
    oracle_max_n: int = 8
    oracle_pair_max_n: int = 7

    # Orders used by each check suite
    closed_form_max_n: int = 30
    recurrence_max_n: int = 30
    row_sum_max_n: int = 25
    inverse_max_n: int = 20
    basis_max_n: int = 20
    absorption_max_n: int = 30
    truncation_max_n: int = 25
    truncation_cut: int = 12

    # Output
    output_format: str = "plain"


# Default configuration instance
default_config = Config()

_FORMATS = ("plain", "csv", "json")


def _validated(values: Dict[str, Any]) -> Dict[str, Any]:
    known = {f.name: f.type for f in fields(Config)}
    accepted = {}
    for key, value in values.items():
        if key not in known:
            logger.warning("ignoring unknown config key %r", key)
            continue
        expected = int if known[key] in (int, "int") else str
        if expected is int and (isinstance(value, bool) or not isinstance(value, int)):
            raise ConfigError(f"{key} must be an integer, got {value!r}")
        if expected is int and value < 0:
            raise ConfigError(f"{key} must be non-negative, got {value}")
        if expected is str and not isinstance(value, str):
            raise ConfigError(f"{key} must be a string, got {value!r}")
        accepted[key] = value
    if accepted.get("output_format", "plain") not in _FORMATS:
        raise ConfigError(f"output_format must be one of {', '.join(_FORMATS)}")
    return accepted


def load_config(config_path: Optional[str] = None) -> Config:
    """Load configuration from a TOML file.

    Keys may sit in a [pystirling] table or at the top level. A missing
    file gives the defaults.
    """
    if config_path is None:
        config_path = os.environ.get(CONFIG_ENV, DEFAULT_CONFIG_PATH)
    config_path = os.path.expanduser(config_path)

    if not os.path.exists(config_path):
        return default_config

    try:
        with open(config_path, "rb") as f:
            data = tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"{config_path}: {e}") from e

    values = data.get("pystirling", data)
    logger.info("loaded configuration from %s", config_path)
    return replace(default_config, **_validated(values))
