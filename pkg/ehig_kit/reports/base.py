"""Base report interface for the EHIG toolkit"""

import json
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..core.types import OutputFormat


@dataclass
class ReportData:
    """Data structure for report information"""

    title: str
    payload: dict[str, Any]
    lines: list[str]
    exit_code: int = 0
    notes: list[str] = field(default_factory=list)


class BaseReport(ABC):
    """Base class for all report types

    ``generate`` turns a library result into ``ReportData``; the text form is
    ``lines`` and the JSON form is ``payload``.
    """

    def __init__(self, output_format: OutputFormat = OutputFormat.TEXT):
        self.output_format = output_format
        self.logger = logging.getLogger(__name__)

    @abstractmethod
    def generate(self, subject: Any) -> ReportData:
        """Generate report data from a library result"""

    def format_report(self, report_data: ReportData) -> str:
        """Format report data for output"""
        if self.output_format is OutputFormat.JSON:
            return json.dumps(report_data.payload, indent=2) + "\n"
        return "".join(f"{line}\n" for line in report_data.lines)

    def save_report(self, report_data: ReportData, output_path: str) -> bool:
        """Save report to file, creating parent directories"""
        try:
            path = Path(output_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as f:
                f.write(self.format_report(report_data))
            return True
        except OSError as e:
            self.logger.error(f"Failed to save {report_data.title} to {output_path}: {e}")
            return False
