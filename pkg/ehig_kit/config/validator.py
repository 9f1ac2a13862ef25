"""Configuration validation for the EHIG toolkit"""

import logging
from typing import Any

from ..core.types import OutputFormat

KNOWN_SECTIONS = {
    "oracle": {"max_points", "max_membership_points"},
    "witness": {"path_cap"},
    "recognition": {"skip_twin_reduction", "reverse_clique_path"},
    "generator": {"seed", "size", "edge_probability"},
    "output": {"format"},
}


class ConfigValidator:
    """Checks a settings dictionary, collecting errors and warnings"""

    def __init__(self) -> None:
        self.errors: list[str] = []
        self.warnings: list[str] = []
        self.logger = logging.getLogger(__name__)

    def validate_config(self, config: dict[str, Any]) -> bool:
        """Validate complete configuration"""
        self.errors = []
        self.warnings = []

        if not isinstance(config, dict):
            self.errors.append("Configuration must be a dictionary")
            return False

        for section, body in config.items():
            if section not in KNOWN_SECTIONS:
                self.warnings.append(f"Unknown configuration section: {section}")
                continue
            if not isinstance(body, dict):
                self.errors.append(f"Section '{section}' must be a dictionary")
                continue
            for key in body:
                if key not in KNOWN_SECTIONS[section]:
                    self.warnings.append(f"Unknown key '{section}.{key}'")

        self._validate_oracle(config.get("oracle", {}))
        self._validate_witness(config.get("witness", {}))
        self._validate_recognition(config.get("recognition", {}))
        self._validate_generator(config.get("generator", {}))
        self._validate_output(config.get("output", {}))
        self.logger.debug(
            f"Configuration checked: {len(self.errors)} errors, "
            f"{len(self.warnings)} warnings"
        )
        return len(self.errors) == 0

    def _positive_int(self, section: str, body: dict[str, Any], key: str) -> None:
        if key not in body:
            return
        value = body[key]
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            self.errors.append(f"'{section}.{key}' must be a positive integer")

    def _validate_oracle(self, oracle: Any) -> None:
        if isinstance(oracle, dict):
            for key in sorted(KNOWN_SECTIONS["oracle"]):
                self._positive_int("oracle", oracle, key)

    def _validate_witness(self, witness: Any) -> None:
        if isinstance(witness, dict):
            self._positive_int("witness", witness, "path_cap")

    def _validate_recognition(self, recognition: Any) -> None:
        if not isinstance(recognition, dict):
            return
        for key in KNOWN_SECTIONS["recognition"]:
            if key in recognition and not isinstance(recognition[key], bool):
                self.errors.append(f"'recognition.{key}' must be true or false")

    def _validate_generator(self, generator: Any) -> None:
        if not isinstance(generator, dict):
            return
        self._positive_int("generator", generator, "size")
        seed = generator.get("seed", 0)
        if isinstance(seed, bool) or not isinstance(seed, int):
            self.errors.append("'generator.seed' must be an integer")
        probability = generator.get("edge_probability", 0.0)
        if (
            isinstance(probability, bool)
            or not isinstance(probability, int | float)
            or not 0 <= probability <= 1
        ):
            self.errors.append("'generator.edge_probability' must lie in [0, 1]")

    def _validate_output(self, output: Any) -> None:
        if not isinstance(output, dict) or "format" not in output:
            return
        try:
            OutputFormat(output["format"])
        except ValueError:
            self.errors.append(f"Invalid output format: {output['format']}")

    def get_errors(self) -> list[str]:
        return self.errors.copy()

    def get_warnings(self) -> list[str]:
        return self.warnings.copy()
