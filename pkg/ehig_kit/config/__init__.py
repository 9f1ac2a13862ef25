"""Configuration management for the EHIG toolkit"""

from .factory import ConfigFactory, ConfigFactoryError
from .loader import ConfigLoader, merge_configs
from .validator import ConfigValidator

__all__ = [
    "ConfigFactory",
    "ConfigFactoryError",
    "ConfigLoader",
    "ConfigValidator",
    "merge_configs",
]
