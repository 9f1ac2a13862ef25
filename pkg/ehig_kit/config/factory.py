"""Settings factory: embedded defaults, user file, then explicit overrides"""

import logging
from typing import Any

from ..core.config import Settings
from ..core.errors import EHIGError
from ..templates import FixtureManager
from .loader import ConfigLoader, merge_configs
from .validator import ConfigValidator


class ConfigFactory:
    """Resolves and caches validated settings"""

    def __init__(self) -> None:
        self.logger = logging.getLogger(__name__)
        self.loader = ConfigLoader()
        self.validator = ConfigValidator()
        self.fixture_manager = FixtureManager()
        self._config_cache: dict[str, dict[str, Any]] = {}

    def create_config(self, config_path: str | None = None) -> dict[str, Any]:
        """Defaults merged with the user file or directory at ``config_path``"""
        cache_key = config_path or "<defaults>"
        if cache_key in self._config_cache:
            return self._config_cache[cache_key]

        try:
            config = self.fixture_manager.default_settings()
            if config_path:
                config = merge_configs(config, self.loader.load_config(config_path))
            if not self.validator.validate_config(config):
                raise ValueError(
                    f"Configuration validation failed: {self.validator.get_errors()}"
                )
        except (OSError, ValueError) as e:
            raise ConfigFactoryError(
                f"Failed to create config from {config_path or 'defaults'}: {e}"
            ) from e

        for warning in self.validator.get_warnings():
            self.logger.warning(warning)
        self._config_cache[cache_key] = config
        return config

    def create_settings(
        self,
        config_path: str | None = None,
        overrides: dict[str, Any] | None = None,
    ) -> Settings:
        """Settings object with CLI ``overrides`` applied last"""
        config = self.create_config(config_path)
        if overrides:
            config = merge_configs(config, overrides)
            if not self.validator.validate_config(config):
                raise ConfigFactoryError(
                    f"Invalid command-line settings: {self.validator.get_errors()}"
                )
        return Settings.from_dict(config)

    def clear_cache(self) -> None:
        self._config_cache.clear()

    def get_cached_config(self, config_path: str | None) -> dict[str, Any] | None:
        return self._config_cache.get(config_path or "<defaults>")


class ConfigFactoryError(EHIGError):
    """Exception raised by ConfigFactory"""
