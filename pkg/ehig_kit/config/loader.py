"""Configuration loader for the EHIG toolkit"""

import json
import logging
from pathlib import Path
from typing import Any

import yaml


class ConfigLoader:
    """Load settings from YAML or JSON files, or a directory of them"""

    def __init__(self) -> None:
        self.logger = logging.getLogger(__name__)
        self.supported_formats = [".yaml", ".yml", ".json"]

    def load_config(self, config_path: str) -> dict[str, Any]:
        """Load configuration from file or directory"""
        path = Path(config_path)

        if path.is_file():
            return self._load_single_file(path)
        elif path.is_dir():
            return self._load_directory(path)
        else:
            raise FileNotFoundError(f"Configuration path not found: {config_path}")

    def _load_single_file(self, file_path: Path) -> dict[str, Any]:
        file_extension = file_path.suffix.lower()
        if file_extension not in self.supported_formats:
            raise ValueError(
                f"Unsupported file format: {file_extension}. "
                f"Supported formats: {self.supported_formats}"
            )

        try:
            with open(file_path, encoding="utf-8") as f:
                if file_extension == ".json":
                    data = json.load(f)
                else:
                    data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in {file_path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in {file_path}: {e}") from e

        if not isinstance(data, dict):
            raise ValueError(f"Configuration in {file_path} must be a mapping")
        self.logger.debug(f"Loaded configuration from {file_path}")
        return data

    def _load_directory(self, dir_path: Path) -> dict[str, Any]:
        """Merge every supported file in the directory, in name order"""
        config: dict[str, Any] = {}
        config_files = sorted(
            (
                p
                for p in dir_path.iterdir()
                if p.is_file() and p.suffix.lower() in self.supported_formats
            ),
            key=lambda p: p.name,
        )
        for file_path in config_files:
            config = merge_configs(config, self._load_single_file(file_path))
        return config

    def validate_file_format(self, file_path: str) -> bool:
        return Path(file_path).suffix.lower() in self.supported_formats


def merge_configs(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Recursive dict merge; values in ``override`` win"""
    merged = base.copy()
    for key, value in override.items():
        if key in merged and isinstance(merged[key], dict) and isinstance(value, dict):
            merged[key] = merge_configs(merged[key], value)
        else:
            merged[key] = value
    return merged
