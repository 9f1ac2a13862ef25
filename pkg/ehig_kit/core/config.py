"""Settings structures for the EHIG toolkit"""

from typing import Any

from .types import OutputFormat

DEFAULT_MAX_POINTS = 25
DEFAULT_MAX_MEMBERSHIP_POINTS = 20
DEFAULT_MAX_ISOMORPHISM_VERTICES = 12
DEFAULT_PATH_CAP = 6


class OracleSettings:
    """Size guards for the exponential oracles"""

    def __init__(
        self,
        max_points: int = DEFAULT_MAX_POINTS,
        max_membership_points: int = DEFAULT_MAX_MEMBERSHIP_POINTS,
    ):
        self.max_points = max_points
        self.max_membership_points = max_membership_points

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary representation"""
        return {
            "max_points": self.max_points,
            "max_membership_points": self.max_membership_points,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "OracleSettings":
        """Create OracleSettings from dictionary"""
        return cls(
            max_points=data.get("max_points", DEFAULT_MAX_POINTS),
            max_membership_points=data.get(
                "max_membership_points", DEFAULT_MAX_MEMBERSHIP_POINTS
            ),
        )


class WitnessSettings:
    """Forbidden-witness extraction settings"""

    def __init__(self, path_cap: int = DEFAULT_PATH_CAP):
        self.path_cap = path_cap

    def to_dict(self) -> dict[str, Any]:
        return {"path_cap": self.path_cap}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "WitnessSettings":
        return cls(path_cap=data.get("path_cap", DEFAULT_PATH_CAP))


class RecognitionSettings:
    """Pipeline switches for recognition and canonical construction"""

    def __init__(
        self, skip_twin_reduction: bool = False, reverse_clique_path: bool = False
    ):
        self.skip_twin_reduction = skip_twin_reduction
        self.reverse_clique_path = reverse_clique_path

    def to_dict(self) -> dict[str, Any]:
        return {
            "skip_twin_reduction": self.skip_twin_reduction,
            "reverse_clique_path": self.reverse_clique_path,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RecognitionSettings":
        return cls(
            skip_twin_reduction=data.get("skip_twin_reduction", False),
            reverse_clique_path=data.get("reverse_clique_path", False),
        )


class GeneratorSettings:
    """Defaults for the seeded generators"""

    def __init__(self, seed: int = 0, size: int = 8, edge_probability: float = 0.3):
        self.seed = seed
        self.size = size
        self.edge_probability = edge_probability

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "size": self.size,
            "edge_probability": self.edge_probability,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "GeneratorSettings":
        return cls(
            seed=data.get("seed", 0),
            size=data.get("size", 8),
            edge_probability=data.get("edge_probability", 0.3),
        )


class Settings:
    """Resolved toolkit settings"""

    def __init__(
        self,
        oracle: OracleSettings | None = None,
        witness: WitnessSettings | None = None,
        recognition: RecognitionSettings | None = None,
        generator: GeneratorSettings | None = None,
        output_format: OutputFormat = OutputFormat.TEXT,
    ):
        self.oracle = oracle or OracleSettings()
        self.witness = witness or WitnessSettings()
        self.recognition = recognition or RecognitionSettings()
        self.generator = generator or GeneratorSettings()
        self.output_format = output_format

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary representation"""
        return {
            "oracle": self.oracle.to_dict(),
            "witness": self.witness.to_dict(),
            "recognition": self.recognition.to_dict(),
            "generator": self.generator.to_dict(),
            "output": {"format": self.output_format.value},
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Settings":
        """Create Settings from a (validated) configuration dictionary"""
        return cls(
            oracle=OracleSettings.from_dict(data.get("oracle", {})),
            witness=WitnessSettings.from_dict(data.get("witness", {})),
            recognition=RecognitionSettings.from_dict(data.get("recognition", {})),
            generator=GeneratorSettings.from_dict(data.get("generator", {})),
            output_format=OutputFormat(data.get("output", {}).get("format", "text")),
        )
