__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

import dataclasses
import logging


@dataclasses.dataclass
class OutputConf:
    """
    Args:
        format (str): "json" or "markdown".
        indent (int): JSON indentation.
        sort_keys (bool): sort JSON keys, needed for byte-identical responses.
        schema_version (str): version written into every response.
    """

    format: str = "json"
    indent: int = 2
    sort_keys: bool = True
    schema_version: str = "1"

    def __post_init__(self):
        assert self.format in ["json", "markdown"], "format must be json or markdown"
        assert type(self.indent) is int, "indent must be an integer"
        assert self.indent >= 0, "indent must be non-negative"
        assert type(self.sort_keys) is bool, "sort_keys must be a boolean"
        assert type(self.schema_version) is str, "schema_version must be a string"


@dataclasses.dataclass
class LoggingConf:
    level: str = "WARNING"
    fmt: str = "%(asctime)s %(name)s %(levelname)s %(message)s"

    def __post_init__(self):
        self.level = self.level.upper()
        assert self.level in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], "unknown logging level"
        assert type(self.fmt) is str, "fmt must be a string"

    @property
    def numeric_level(self) -> int:
        return getattr(logging, self.level)
