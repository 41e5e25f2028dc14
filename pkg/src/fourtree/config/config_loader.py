import copy
import os
from typing import Any, Dict, Optional

from fourtree.config.models import RunConfig, make_run_config
from fourtree.utils.constants import DEFAULT_CONFIG, DEFAULT_CONFIG_PATH, USER_CONFIG_PATH
from fourtree.utils.logging import get_logger
from fourtree.utils.yaml_handler import load_yaml

logger = get_logger(__name__)


def _merge(base: Dict[str, Any], overlay: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in overlay.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _read(path: str) -> Optional[Dict[str, Any]]:
    if not os.path.exists(path):
        logger.warning(f"Could not find config file {path}")
        return None
    data = load_yaml(path)
    if data is None:
        return {}
    if not isinstance(data, dict):
        logger.warning(f"Config file {path} does not hold a mapping, ignoring it")
        return None
    return data


def load_config_dict(path: Optional[str] = None) -> Dict[str, Any]:
    """Load the shipped defaults and overlay a user file.

    Args:
        path: User config file; falls back to ``FOURTREE_CONFIG``

    Returns:
        The merged configuration mapping
    """
    base = _read(DEFAULT_CONFIG_PATH)
    if base is None:
        logger.warning("Using built-in default configuration")
        base = DEFAULT_CONFIG
    else:
        base = _merge(DEFAULT_CONFIG, base)

    user_path = path or USER_CONFIG_PATH
    if user_path:
        overlay = _read(user_path)
        if overlay is not None:
            logger.info(f"Loading config overlay from {user_path}")
            base = _merge(base, overlay)
    return base


def load_config(path: Optional[str] = None) -> RunConfig:
    """Load and validate the run configuration.

    Raises:
        BadParameters: A configuration value is invalid
    """
    return make_run_config(load_config_dict(path))
