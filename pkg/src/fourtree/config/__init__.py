"""Configuration package for fourtree.

Loads the shipped YAML defaults, overlays user files and validates the
result.
"""

from fourtree.config.config_loader import load_config, load_config_dict
from fourtree.config.models import GeneratorSpec, RunConfig, make_spec
