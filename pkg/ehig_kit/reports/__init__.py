"""Report generation for the EHIG toolkit"""

from .base import BaseReport, ReportData
from .certificate import (
    CanonicalDocument,
    CertificateDocument,
    CertificateReport,
    IntervalDocument,
    MembershipReport,
    WitnessReport,
)
from .model import ModelDumpReport
from .oracle import OracleReport

__all__ = [
    "BaseReport",
    "CanonicalDocument",
    "CertificateDocument",
    "CertificateReport",
    "IntervalDocument",
    "MembershipReport",
    "ModelDumpReport",
    "OracleReport",
    "ReportData",
    "WitnessReport",
]
