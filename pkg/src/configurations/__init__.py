__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Configurations
This package contains the typed configurations of the command-line surface.

The yaml files under cfg/ are composed by hydra, turned into plain dicts, and every dict whose key is listed in
SETTINGS_CLASSES is instantiated into its dataclass. The dataclasses check types and ranges in __post_init__, so a
typo in an override fails before any computation starts."""

from typing import Any, Mapping

from src.configurations.cli_confs import OutputConf, LoggingConf
from src.configurations.verification_confs import VerificationConf

SETTINGS_CLASSES = {
    "output_settings": OutputConf,
    "logging_settings": LoggingConf,
    "verification_settings": VerificationConf,
}


def instantiate_settings(tree: Mapping[str, Any]) -> dict:
    """
    Replaces every mapping whose key names a settings dataclass with an instance of that dataclass.

    Args:
        tree (Mapping[str, Any]): the composed configuration as plain containers.

    Returns:
        dict: the same tree with dataclass leaves.
    """

    settings = {}
    for key, value in tree.items():
        if key in SETTINGS_CLASSES:
            settings[key] = SETTINGS_CLASSES[key](**value)
        elif isinstance(value, Mapping):
            settings[key] = instantiate_settings(value)
        else:
            settings[key] = value
    return settings
