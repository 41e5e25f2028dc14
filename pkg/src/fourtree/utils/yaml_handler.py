from typing import Any, TextIO

import yaml


def load_yaml(file_path: str) -> Any:
    """Load YAML data from a file.

    Args:
        file_path: Path to the YAML file

    Returns:
        The loaded YAML data.
    """
    with open(file_path, "r") as f:
        return yaml.safe_load(f)


def dump_yaml(data: Any, file_path: str) -> None:
    """Dump data to a YAML file.

    Args:
        data: The data to dump
        file_path: Path to the output file
    """
    with open(file_path, "w") as f:
        write_yaml(data, f)


def write_yaml(data: Any, stream: TextIO) -> None:
    """Write data as block-style YAML, keys in insertion order."""
    yaml.safe_dump(data, stream, default_flow_style=False, sort_keys=False, width=100)


def dumps_yaml(data: Any) -> str:
    """Render data as block-style YAML text."""
    return yaml.safe_dump(data, default_flow_style=False, sort_keys=False, width=100)
